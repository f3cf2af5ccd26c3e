#include <random>

#include "doctest.h"
#include "hirz/errors.hpp"
#include "hirz/seshadri.hpp"
#include "hirz/verify.hpp"
#include "oracles.hpp"

using namespace hirz;

namespace {

PolarizationL pol(std::int64_t a, std::int64_t b, std::vector<std::int64_t> mu) {
  return PolarizationL{a, b, std::move(mu), true};
}

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(Rational::Integer(n), Rational::Integer(d)); }

SeshadriResult closed(std::int64_t e, const PolarizationL& l) {
  const auto r = l.mu.size();
  const auto ctx = SurfaceContext::hirzebruch(e, r);
  return static_cast<std::int64_t>(r) == e + 2 ? epsilon_r_e2(ctx, l) : epsilon_r_e3(ctx, l);
}

}  // namespace

TEST_SUITE("seshadri") {
  TEST_CASE("Delta set sizes") {
    CHECK(delta_set_r_e2(0).size() == 3);
    CHECK(delta_set_r_e2(1).size() == 5);
    CHECK(delta_set_r_e2(2).size() == 8);
    for (const auto& entry : delta_set_r_e2(3)) CHECK(*entry.divisor.m_x == 1);
  }

  TEST_CASE("Lambda set contents") {
    CHECK(lambda_set_r_e3(0).size() == 5);
    DivisorClass w;
    w.a = 2;
    w.b = 2;
    w.m = {1, 1, 1, 1};
    w.m_x = 1;
    CHECK(lambda_set_r_e3(1).contains(w));
    std::size_t first_family = 0;
    for (const auto& entry : lambda_set_r_e3(3))
      if (entry.divisor.a == 2 && *entry.divisor.m_x == 1) ++first_family;
    CHECK(first_family == 15);
  }

  TEST_CASE("epsilon at r = e+2") {
    const auto r0 = closed(0, pol(2, 2, {1, 1}));
    CHECK(r0.epsilon == q(2));
    CHECK(r0.tied_branches.size() == 3);
    CHECK(closed(2, pol(3, 9, {2, 2, 1, 1})).epsilon == q(3));
  }

  TEST_CASE("a nef but non-ample L is refused; the engine still evaluates it") {
    // alpha = mu_i makes L.(f - E_i) = 0.
    const auto l = pol(1, 3, {1, 1, 1});
    CHECK_FALSE(passes_ampleness_screen(SurfaceContext::hirzebruch(1, 3), l));
    CHECK_THROWS_AS(closed(1, l), HypothesisError);
    const auto engine = generic_epsilon(l, delta_set_r_e2(1));
    CHECK(engine.epsilon == q(1));
    REQUIRE(engine.argmin_classes.size() >= 1);
    CHECK(engine.argmin_classes.front().a == 0);
    CHECK(engine.argmin_classes.front().b == 1);
  }

  TEST_CASE("epsilon at r = e+3") {
    CHECK(closed(0, pol(3, 3, {1, 1, 1})).epsilon == q(3));
    CHECK(closed(1, pol(2, 4, {1, 1, 1, 1})).epsilon == q(2));
    const auto r3 = closed(3, pol(2, 10, {1, 1, 1, 1, 1, 1}));
    CHECK(r3.epsilon == q(2));
    CHECK(r3.branch == "alpha");
  }

  TEST_CASE("non-integer epsilon") {
    const auto l = pol(6, 13, {3, 3, 3, 3, 3});
    const auto r = closed(2, l);
    CHECK(r.epsilon == q(11, 2));
    CHECK(r.branch == "B");
    CHECK(generic_epsilon(l, lambda_set_r_e3(2)).epsilon == q(11, 2));
  }

  TEST_CASE("A and B") {
    const auto l = pol(2, 10, {1, 1, 1, 1, 1, 1});
    CHECK(a_of_l(3, l) == std::optional<Rational>(q(9)));
    CHECK(b_of_l(3, l) == std::optional<Rational>(q(13, 2)));
    const auto l1 = pol(2, 4, {1, 2, 1, 3});
    CHECK(a_of_l(1, l1) == std::optional<Rational>(q(2 * 4 - 7)));
    CHECK_FALSE(b_of_l(1, l1).has_value());
    CHECK_FALSE(a_of_l(0, pol(1, 1, {1, 1, 1})).has_value());
    CHECK_THROWS_AS(a_of_l(2, pol(1, 1, {1, 1})), StructuralError);
  }

  TEST_CASE("refusals") {
    const auto l = pol(2, 2, {1, 1});
    CHECK_THROWS_AS(epsilon_r_e2(SurfaceContext::hirzebruch(0, 2, false, false), l), HypothesisError);
    auto not_ample = l;
    not_ample.ample_asserted = false;
    CHECK_THROWS_AS(epsilon_r_e2(SurfaceContext::hirzebruch(0, 2), not_ample), HypothesisError);
    CHECK_THROWS_AS(epsilon_r_e2(SurfaceContext::hirzebruch(1, 2), pol(2, 4, {1, 1})), UnsupportedRangeError);
    CHECK_THROWS_AS(epsilon_r_e3(SurfaceContext::hirzebruch(0, 3), l), StructuralError);
  }

  TEST_CASE("generic engine") {
    const auto ctx = SurfaceContext::hirzebruch(1, 2, true);
    ClassCatalog cat(ctx);
    DivisorClass f = DivisorClass::fiber(ctx);
    f.m_x = 1;
    cat.add(f, {});
    const auto l = pol(4, 9, {2, 1});
    CHECK(generic_epsilon(l, cat).epsilon == q(4));
    cat.add(f, {});
    CHECK(generic_epsilon(l, cat).epsilon == q(4));

    ClassCatalog empty(ctx);
    CHECK_THROWS_AS(generic_epsilon(l, empty), PreconditionError);
    ClassCatalog neg(ctx);
    DivisorClass e1 = DivisorClass::exceptional(ctx, 0);
    neg.add(e1.scaled(-1), {});  // L.(-E1) = -mu_1 < 0 with m_x = 0
    neg.add(f, {});
    CHECK_THROWS_AS(generic_epsilon(l, neg), HypothesisError);
  }

  TEST_CASE("ruled examples") {
    const auto ctx = SurfaceContext::ruled(1, 6, 1);
    const auto l = pol(2, 15, {1});
    CHECK(epsilon_ruled(ctx, l, {RuledCase::OnSection, std::nullopt}).epsilon == q(2));
    CHECK(epsilon_ruled(ctx, l, {RuledCase::FiberAndExceptional, 0}).epsilon == q(1));
    CHECK(epsilon_ruled(ctx, l, {RuledCase::Generic, std::nullopt}).epsilon == q(2));
    CHECK_THROWS_AS(epsilon_ruled(ctx, l, {RuledCase::OnFiber, 3}), StructuralError);
    CHECK_THROWS_AS(epsilon_ruled(ctx, l, {RuledCase::OnFiber, std::nullopt}), StructuralError);
    CHECK_THROWS_AS(epsilon_ruled(SurfaceContext::ruled(3, 6, 1), l, {}), HypothesisError);
    const auto delta5 = ruled_delta(ctx, {RuledCase::SectionAndFiber, 0});
    CHECK(delta5.size() == 2);
  }

  TEST_CASE("nef check and the supremum") {
    const auto l = pol(3, 9, {2, 2, 1, 1});
    const auto eps = closed(2, l).epsilon;
    const auto delta = delta_set_r_e2(2);
    const auto ctx = delta.context();
    DivisorClass h = DivisorClass::zero(ctx);  // an ample class on the blowup at x
    h.a = 10;
    h.b = 100;
    h.m = {1, 1, 1, 1};
    h.m_x = 1;
    CHECK(nef_check(ctx, scaled_lift(l, eps), delta, h));
    CHECK_FALSE(nef_check(ctx, scaled_lift(l, eps + Rational(1)), delta, h));
    DivisorClass e1 = DivisorClass::exceptional(ctx, 0);
    CHECK_FALSE(nef_check(ctx, e1, delta, h));
  }

  TEST_CASE("sqrt bound") {
    const auto ctx = SurfaceContext::hirzebruch(0, 2);
    const auto l = pol(2, 2, {1, 1});  // L^2 = 6
    CHECK(sqrt_bound_holds(ctx, l, q(2)));
    CHECK(sqrt_bound_holds(ctx, l, q(0)));
    CHECK_FALSE(sqrt_bound_holds(ctx, l, q(7)));
    CHECK_FALSE(sqrt_bound_holds(ctx, l, q(5, 2)));
  }
}

TEST_SUITE("seshadri-properties") {
  TEST_CASE("closed forms match subset search and Gram-matrix supremum") {
    std::mt19937_64 rng(11);
    for (std::int64_t e = 0; e <= 4; ++e) {
      for (std::int64_t offset : {2, 3}) {
        const auto r = static_cast<std::size_t>(e + offset);
        const auto cat = offset == 2 ? delta_set_r_e2(e) : lambda_set_r_e3(e);
        int seen = 0;
        for (int draw = 0; draw < 200000 && seen < 150; ++draw) {
          auto l = draw_hirzebruch_l(e, r, rng);
          if (!l) continue;
          ++seen;
          const auto res = closed(e, *l);
          CHECK(res.epsilon == oracle::sup_over(cat.context(), *l, cat.classes()));
          if (offset == 2) CHECK(res.epsilon == oracle::epsilon_r_e2(e, *l));
          // Every reported minimizer is tight.
          for (const auto& c : res.argmin_classes) {
            DivisorClass lift = l->as_class();
            lift.m_x = 0;
            CHECK(Rational(oracle::form(cat.context(), lift, c)) == res.epsilon * Rational(*c.m_x));
          }
          CHECK_FALSE(res.argmin_classes.empty());
        }
        CHECK(seen == 150);
      }
    }
  }

  TEST_CASE("monotone in mu and beta, scale equivariant") {
    std::mt19937_64 rng(5);
    for (std::int64_t e = 0; e <= 3; ++e) {
      for (std::int64_t offset : {2, 3}) {
        const auto r = static_cast<std::size_t>(e + offset);
        const auto cat = offset == 2 ? delta_set_r_e2(e) : lambda_set_r_e3(e);
        int seen = 0;
        for (int draw = 0; draw < 200000 && seen < 100; ++draw) {
          auto l = draw_hirzebruch_l(e, r, rng);
          if (!l) continue;
          ++seen;
          const auto base = generic_epsilon(*l, cat).epsilon;
          for (std::size_t i = 0; i < r; ++i) {
            auto up = *l;
            ++up.mu[i];
            CHECK(generic_epsilon(up, cat).epsilon <= base);
          }
          auto more_beta = *l;
          ++more_beta.beta;
          CHECK(generic_epsilon(more_beta, cat).epsilon >= base);
          for (std::int64_t k : {2, 3, 7})
            CHECK(generic_epsilon(l->scaled(k), cat).epsilon == Rational(k) * base);
        }
      }
    }
  }
}
