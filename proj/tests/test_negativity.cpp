#include "doctest.h"
#include "hirz/negativity.hpp"
#include "oracles.hpp"

using namespace hirz;

namespace {

DivisorClass cls(std::int64_t a, std::int64_t b, std::vector<std::int64_t> m) {
  DivisorClass d;
  d.a = a;
  d.b = b;
  d.m = std::move(m);
  return d;
}

std::int64_t value(const BoundValue& v) { return std::get<std::int64_t>(v); }

}  // namespace

TEST_SUITE("negativity") {
  TEST_CASE("Hirzebruch bound examples") {
    CHECK(value(wbnc_bound_hirzebruch(1, 5, cls(2, 2, {1, 1, 1, 1, 1}))) == -6);
    CHECK(std::holds_alternative<Exempt>(wbnc_bound_hirzebruch(1, 5, cls(0, 0, {-1, 0, 0, 0, 0}))));
    CHECK(value(wbnc_bound_hirzebruch(0, 0, cls(0, 1, {}))) == -2);
  }

  TEST_CASE("ruled bound examples") {
    CHECK(ruled_lambda(1, 3, 2) == 4);
    CHECK(value(wbnc_bound_ruled(1, 3, 2, cls(1, 3, {1, 0}))) == -3);
    CHECK(ruled_lambda(2, 0, 0) == 3);
    for (std::int64_t a = 0; a <= 4; ++a) CHECK(value(wbnc_bound_ruled(2, 0, 0, cls(a, 0, {}))) == -2 + (2 - 3 - 4) * a);
    CHECK(std::holds_alternative<Exempt>(wbnc_bound_ruled(1, 3, 1, cls(0, 0, {-1}))));
  }

  TEST_CASE("floor is exact for negative e") {
    // (r + e)/2 = -3/2 floors to -2, so lambda = max{1, -3, -1} = 1.
    CHECK(ruled_lambda(1, -4, 1) == 1);
    CHECK(ruled_lambda(3, -7, 0) == 5);
  }

  TEST_CASE("reports") {
    ClassCatalog empty(SurfaceContext::hirzebruch(1, 2));
    CHECK(bound_report(empty).rows.empty());
    CHECK(verify_bounds(empty).ok());

    ClassCatalog fake(SurfaceContext::hirzebruch(0, 3));
    fake.add(cls(3, 3, {3, 3, 3}), {});  // C^2 = 18 - 27 = -9, bound = -3 + (2 - 1) * 3 = 0
    const auto report = bound_report(fake);
    REQUIRE(report.rows.size() == 1);
    CHECK(report.rows[0].violated);
    CHECK(report.rows[0].slack == std::optional<std::int64_t>(-9));
    CHECK_THROWS_AS(verify_bounds(fake), BoundViolation);
    try {
      verify_bounds(fake);
    } catch (const BoundViolation& v) {
      CHECK(v.report().violations() == 1);
    }
  }

  TEST_CASE("statement bound fails for C_e itself; the per-case bound holds") {
    // C_e on F_1 with no points: C^2 = -1, stated bound = -2 + 3 = 1.
    const auto f1 = SurfaceContext::hirzebruch(1, 0);
    CHECK(value(wbnc_bound_hirzebruch(1, 0, DivisorClass::section(f1))) == 1);
    CHECK(value(case_bound(f1, DivisorClass::section(f1))) == -1);
    for (std::int64_t e = 1; e <= 50; ++e) {
      const auto ctx = SurfaceContext::hirzebruch(e, 0);
      const auto c = DivisorClass::section(ctx);
      CHECK(self_intersection(ctx, c) < value(wbnc_bound_hirzebruch(e, 0, c)));
      CHECK(self_intersection(ctx, c) >= value(case_bound(ctx, c)));
    }
    // Ruled: C_e has C^2 = -e, the stated bound is at most 1 - 4g.
    const auto ruled = SurfaceContext::ruled(1, 10, 0);
    CHECK(self_intersection(ruled, DivisorClass::section(ruled)) < value(wbnc_bound_ruled(1, 10, 0, DivisorClass::section(ruled))));
  }
}

TEST_SUITE("negativity-properties") {
  TEST_CASE("bound is nonincreasing in r") {
    for (std::int64_t e = 0; e <= 8; ++e)
      for (std::int64_t r = 0; r <= 12; ++r)
        for (std::int64_t a = 0; a <= 6; ++a) {
          const auto c = cls(a, a * e, {});
          CHECK(value(wbnc_bound_hirzebruch(e, r + 1, c)) <= value(wbnc_bound_hirzebruch(e, r, c)));
        }
  }

  TEST_CASE("every catalog class with C.f >= 2 meets the stated bound") {
    for (std::int64_t e = 0; e <= 6; ++e)
      for (std::size_t r = 0; static_cast<std::int64_t>(r) <= e + 4; ++r)
        for (const auto& cat : {enumerate_minus_one_classes(e, r), enumerate_minus_two_classes(e, r)}) {
          for (const auto& row : bound_report(cat).rows)
            if (row.divisor.a >= 2) CHECK_FALSE(row.violated);
          CHECK(case_bound_report(cat).ok());
        }
  }
}
