#include <random>

#include "doctest.h"
#include "hirz/errors.hpp"
#include "hirz/lattice.hpp"
#include "oracles.hpp"

using namespace hirz;

namespace {

DivisorClass cls(std::int64_t a, std::int64_t b, std::vector<std::int64_t> m,
                 std::optional<std::int64_t> mx = std::nullopt) {
  DivisorClass d;
  d.a = a;
  d.b = b;
  d.m = std::move(m);
  d.m_x = mx;
  return d;
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("intersection examples") {
    const auto f1 = SurfaceContext::hirzebruch(1, 0);
    CHECK(intersect(f1, DivisorClass::section(f1), DivisorClass::section(f1)) == -1);
    const auto f2 = SurfaceContext::hirzebruch(2, 0);
    CHECK(self_intersection(f2, cls(1, 2, {})) == 2);
    const auto x = SurfaceContext::hirzebruch(1, 5);
    const auto d = cls(2, 2, {1, 1, 1, 1, 1});
    CHECK(self_intersection(x, d) == -1);
    CHECK(self_intersection(x, d) == oracle::form(x, d, d));
  }

  TEST_CASE("shape mismatch is a structural error") {
    const auto ctx = SurfaceContext::hirzebruch(1, 2);
    CHECK_THROWS_AS(intersect(ctx, cls(1, 0, {1}), cls(1, 0, {1, 0})), StructuralError);
    CHECK_THROWS_AS(intersect(ctx, cls(1, 0, {1, 0}, 1), cls(1, 0, {1, 0})), StructuralError);
    CHECK_THROWS_AS(SurfaceContext::ruled(0, 1, 0), StructuralError);
    CHECK_THROWS_AS(SurfaceContext::hirzebruch(-1, 0), StructuralError);
  }

  TEST_CASE("canonical class") {
    CHECK(canonical_class(SurfaceContext::hirzebruch(0, 0)) == cls(-2, -2, {}));
    CHECK(canonical_class(SurfaceContext::hirzebruch(3, 2)) == cls(-2, -5, {-1, -1}));
    CHECK(canonical_class(SurfaceContext::ruled(1, 5, 0)) == cls(-2, -5, {}));
    CHECK(canonical_class(SurfaceContext::hirzebruch(0, 1, true)) == cls(-2, -2, {-1}, -1));
  }

  TEST_CASE("arithmetic genus") {
    const auto f1 = SurfaceContext::hirzebruch(1, 0);
    CHECK(arithmetic_genus(f1, DivisorClass::section(f1)) == Rational(0));
    CHECK(arithmetic_genus(SurfaceContext::hirzebruch(0, 3), cls(1, 1, {1, 1, 1})) == Rational(0));
    CHECK(arithmetic_genus(SurfaceContext::hirzebruch(2, 0), cls(2, 4, {})) == Rational(1));
  }

  TEST_CASE("elementary transform examples") {
    const auto ctx = SurfaceContext::hirzebruch(1, 5);
    const auto c = cls(2, 2, {2, 1, 1, 1, 1});
    const auto t = elementary_transform(ctx, c, 0);
    CHECK(t.context.e == 0);
    CHECK(t.context.r == 4);
    CHECK(t.divisor == cls(2, 0, {1, 1, 1, 1}));
    CHECK(self_intersection(ctx, c) == self_intersection(t.context, t.divisor));

    const auto ctx9 = SurfaceContext::hirzebruch(5, 9);
    const auto c9 = cls(2, 11, {2, 1, 1, 1, 1, 2, 2, 1, 0});
    const auto t9 = elementary_transform(ctx9, c9, 0);
    CHECK(t9.divisor.b == 9);
    CHECK(oracle::form(ctx9, c9, c9) == oracle::form(t9.context, t9.divisor, t9.divisor));
    CHECK(oracle::form(ctx9, c9, oracle::anticanonical(ctx9)) ==
          oracle::form(t9.context, t9.divisor, oracle::anticanonical(t9.context)));
  }

  TEST_CASE("elementary transform refusals") {
    const auto ctx = SurfaceContext::hirzebruch(1, 2);
    CHECK_THROWS_AS(elementary_transform(ctx, cls(2, 2, {1, 1}), 0), PreconditionError);
    CHECK_THROWS_AS(elementary_transform(ctx, cls(1, 0, {1, 0}), 0), PreconditionError);
    CHECK_THROWS_AS(elementary_transform(ctx, cls(1, 1, {1, 0}), 5), StructuralError);
    CHECK_THROWS_AS(elementary_transform(SurfaceContext::hirzebruch(0, 2), cls(1, 1, {1, 0}), 0),
                    UnsupportedRangeError);
    CHECK_THROWS_AS(elementary_transform(SurfaceContext::ruled(1, 2, 2), cls(1, 1, {1, 0}), 0),
                    PreconditionError);
  }

  TEST_CASE("overflow fails loudly") {
    const auto ctx = SurfaceContext::hirzebruch(3, 0);
    const auto big = cls(std::int64_t{1} << 40, std::int64_t{1} << 40, {});
    CHECK_THROWS_AS(intersect(ctx, big, big), OverflowError);
  }

  TEST_CASE("to_string") {
    const auto ctx = SurfaceContext::hirzebruch(1, 2, true);
    CHECK(cls(2, 2, {1, 0}, 1).to_string() == "2C + 2f - E1 - Ex");
    CHECK(DivisorClass::exceptional(ctx, 1).to_string() == "E2");
    CHECK(DivisorClass::zero(ctx).to_string() == "0");
  }
}

TEST_SUITE("lattice-properties") {
  TEST_CASE("form agrees with the Gram matrix, is symmetric and bilinear") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> coord(-1000000, 1000000);
    for (int trial = 0; trial < 2000; ++trial) {
      const auto e = static_cast<std::int64_t>(trial % 8);
      const auto r = static_cast<std::size_t>(trial % 6);
      const bool x = trial % 2;
      const auto ctx = SurfaceContext::hirzebruch(e, r, x);
      auto draw = [&] {
        DivisorClass d = DivisorClass::zero(ctx);
        d.a = coord(rng);
        d.b = coord(rng);
        for (auto& v : d.m) v = coord(rng);
        if (x) d.m_x = coord(rng);
        return d;
      };
      const auto d1 = draw(), d2 = draw(), d3 = draw();
      CHECK(intersect(ctx, d1, d2) == oracle::form(ctx, d1, d2));
      CHECK(intersect(ctx, d1, d2) == intersect(ctx, d2, d1));
      CHECK(intersect(ctx, d1 + d2, d3) == intersect(ctx, d1, d3) + intersect(ctx, d2, d3));
    }
  }

  TEST_CASE("canonical class matches the oracle on every shape") {
    for (std::int64_t e = 0; e <= 6; ++e)
      for (std::size_t r = 0; r <= 6; ++r) {
        const auto ctx = SurfaceContext::hirzebruch(e, r, r % 2 == 0);
        CHECK(canonical_class(ctx).scaled(-1) == oracle::anticanonical(ctx));
      }
    for (std::int64_t g = 1; g <= 3; ++g) {
      const auto ctx = SurfaceContext::ruled(g, -2, 3);
      CHECK(canonical_class(ctx).scaled(-1) == oracle::anticanonical(ctx));
    }
  }
}
