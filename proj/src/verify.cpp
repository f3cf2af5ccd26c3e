#include "hirz/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "hirz/cohom.hpp"
#include "hirz/curves.hpp"
#include "hirz/errors.hpp"
#include "hirz/negativity.hpp"

namespace hirz {

namespace {

constexpr std::size_t kMaxDetails = 12;

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

std::string describe(std::int64_t e, const PolarizationL& l) {
  std::ostringstream os;
  os << "e=" << e << " L=(" << l.alpha << "," << l.beta << ";";
  for (std::size_t i = 0; i < l.mu.size(); ++i) os << (i ? "," : "") << l.mu[i];
  os << ")";
  return os.str();
}

void note(CheckResult& out, const std::string& line) {
  if (out.details.size() < kMaxDetails) out.details.push_back(line);
}

std::int64_t l_squared(const SurfaceContext& ctx, const PolarizationL& l) {
  const auto lc = l.as_class();
  return intersect(ctx.without_extra_point(), lc, lc);
}

// Shared sweep for criteria 3-5: closed forms on F_e, r in {e+2, e+3}.
struct HirzebruchSweep {
  std::size_t evaluated = 0;
  std::size_t engine_mismatches = 0;
  std::size_t short_pairs = 0;  // (e, r) pairs below the sample target
  std::size_t non_integer_e2 = 0;
  std::size_t bad_denominator_e3 = 0;
  std::size_t sqrt_failures = 0;
  std::optional<std::string> non_integer_witness;
  std::vector<std::string> failures;
  std::vector<std::string> coverage;
};

bool denominator_allowed(std::int64_t e, const Rational& eps) {
  if (eps.is_integer()) return true;
  for (std::int64_t a = 2; 2 * a <= e + 3; ++a) {
    if (a - 1 > 1 && (a - 1) % eps.den() == 0) return true;
    if (a % eps.den() == 0) return true;
  }
  return false;
}

HirzebruchSweep run_hirzebruch_sweep(const VerifyOptions& opts) {
  HirzebruchSweep s;
  const std::int64_t e_max = opts.quick ? 2 : 5;
  const std::size_t target = opts.quick ? std::min<std::size_t>(opts.samples, 100) : opts.samples;
  for (std::int64_t e = 0; e <= e_max; ++e) {
    for (std::int64_t offset : {2, 3}) {
      const auto r = static_cast<std::size_t>(e + offset);
      const auto ctx = SurfaceContext::hirzebruch(e, r);
      const auto& catalog_x = offset == 2 ? delta_set_r_e2(e) : lambda_set_r_e3(e);
      std::mt19937_64 rng(opts.seed ^ static_cast<std::uint64_t>(e * 16 + offset));
      std::size_t accepted = 0;
      const std::size_t max_draws = 400 * target + 100000;
      for (std::size_t draw = 0; draw < max_draws && accepted < target; ++draw) {
        auto l = draw_hirzebruch_l(e, r, rng);
        if (!l) continue;
        ++accepted;
        ++s.evaluated;
        const SeshadriResult closed = offset == 2 ? epsilon_r_e2(ctx, *l) : epsilon_r_e3(ctx, *l);
        const SeshadriResult engine = generic_epsilon(*l, catalog_x);
        if (closed.epsilon != engine.epsilon) {
          ++s.engine_mismatches;
          if (s.failures.size() < kMaxDetails)
            s.failures.push_back("mismatch " + describe(e, *l) + ": closed " + closed.epsilon.str() +
                                 ", engine " + engine.epsilon.str());
        }
        const Rational& eps = closed.epsilon;
        if (offset == 2 && !eps.is_integer()) {
          ++s.non_integer_e2;
          if (s.failures.size() < kMaxDetails)
            s.failures.push_back("non-integer at r=e+2: " + describe(e, *l) + " eps=" + eps.str());
        }
        if (offset == 3) {
          if (!eps.is_integer() && !s.non_integer_witness)
            s.non_integer_witness = describe(e, *l) + " eps=" + eps.str() + " via " + closed.branch;
          if (!denominator_allowed(e, eps)) ++s.bad_denominator_e3;
        }
        if (!sqrt_bound_holds(ctx, *l, eps)) {
          ++s.sqrt_failures;
          if (s.failures.size() < kMaxDetails)
            s.failures.push_back("eps^2 > L^2 at " + describe(e, *l));
        }
      }
      if (accepted < target) ++s.short_pairs;
      s.coverage.push_back("e=" + std::to_string(e) + " r=" + std::to_string(r) + ": " +
                           std::to_string(accepted) + " admissible L");
    }
  }
  return s;
}

struct RuledSweep {
  std::size_t evaluated = 0;
  std::size_t mismatches = 0;
  std::size_t sqrt_failures = 0;
  std::size_t short_cases = 0;
  std::vector<std::string> failures;
};

RuledSweep run_ruled_sweep(const VerifyOptions& opts) {
  RuledSweep s;
  const std::size_t target = opts.quick ? std::min<std::size_t>(opts.ruled_samples, 20) : opts.ruled_samples;
  const std::int64_t g = 1;
  for (std::int64_t e = 6; e <= 10; ++e) {
    for (int c = 1; c <= 6; ++c) {
      const RuledCase kind = static_cast<RuledCase>(c);
      std::mt19937_64 rng(opts.seed ^ static_cast<std::uint64_t>(1000 + e * 16 + c));
      std::size_t accepted = 0;
      for (std::size_t draw = 0; draw < 50 * target && accepted < target; ++draw) {
        RuledPosition pos{kind, std::nullopt};
        const std::int64_t r_lo = pos.needs_index() ? 1 : 0;
        const auto r = static_cast<std::size_t>(uniform(rng, r_lo, e - 2));
        if (pos.needs_index()) pos.i = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(r) - 1));
        const auto ctx = SurfaceContext::ruled(g, e, r);
        auto l = draw_ruled_l(ctx, rng);
        if (!l) continue;
        ++accepted;
        ++s.evaluated;
        const SeshadriResult closed = epsilon_ruled(ctx, *l, pos);
        const SeshadriResult engine = generic_epsilon(*l, ruled_delta(ctx, pos));
        if (closed.epsilon != engine.epsilon) {
          ++s.mismatches;
          if (s.failures.size() < kMaxDetails)
            s.failures.push_back("case " + std::to_string(c) + " " + describe(e, *l) + ": closed " +
                                 closed.epsilon.str() + ", engine " + engine.epsilon.str());
        }
        if (!sqrt_bound_holds(ctx, *l, closed.epsilon)) ++s.sqrt_failures;
      }
      if (accepted < target) ++s.short_cases;
    }
  }
  return s;
}

CheckResult check_h0() {
  CheckResult out{1, "h0 summation equals closed form", false, {}, {}, 0};
  std::size_t cases = 0, bad = 0;
  for (std::int64_t e = 0; e <= 10; ++e)
    for (std::int64_t a = 0; a <= 10; ++a)
      for (std::int64_t b = a * e; b <= 50; ++b) {
        ++cases;
        const std::int64_t closed = (a + 1) * (b + 1) - a * (a + 1) * e / 2;
        const std::int64_t sum = h0_fe(e, a, b);
        if (sum != closed) {
          ++bad;
          note(out, "e=" + std::to_string(e) + " a=" + std::to_string(a) + " b=" + std::to_string(b) +
                        ": sum " + std::to_string(sum) + " vs " + std::to_string(closed));
        }
      }
  out.passed = bad == 0 && cases > 0;
  out.summary = std::to_string(cases) + " (e,a,b) triples, " + std::to_string(bad) + " mismatches";
  return out;
}

CheckResult check_classification(const VerifyOptions& opts) {
  CheckResult out{2, "diophantine oracle equals classified enumerators", false, {}, {}, 0};
  const std::int64_t e_max = opts.quick ? 3 : 6;
  std::size_t pairs = 0, discrepancies = 0, classes = 0;
  for (std::int64_t e = 0; e <= e_max; ++e) {
    const std::int64_t a_max = (e + 4) / 2 + 1;  // ceil((e+3)/2) + 1
    const std::int64_t b_max = a_max * e + 2;
    for (std::size_t r = 0; static_cast<std::int64_t>(r) <= e + 4; ++r) {
      for (int target : {-1, -2}) {
        ++pairs;
        const auto catalog = all_positive_stratum(target == -1 ? enumerate_minus_one_classes(e, r)
                                                             : enumerate_minus_two_classes(e, r));
        const auto oracle = all_positive_stratum(diophantine_oracle(e, r, target, a_max, b_max));
        const auto lc = catalog.classes();
        const auto oc = oracle.classes();
        classes += oc.size();
        std::vector<DivisorClass> only_catalog, only_oracle;
        std::set_difference(lc.begin(), lc.end(), oc.begin(), oc.end(), std::back_inserter(only_catalog));
        std::set_difference(oc.begin(), oc.end(), lc.begin(), lc.end(), std::back_inserter(only_oracle));
        discrepancies += only_catalog.size() + only_oracle.size();
        for (const auto& d : only_catalog)
          note(out, "e=" + std::to_string(e) + " r=" + std::to_string(r) + " target " +
                        std::to_string(target) + ": catalog only " + d.to_string());
        for (const auto& d : only_oracle)
          note(out, "e=" + std::to_string(e) + " r=" + std::to_string(r) + " target " +
                        std::to_string(target) + ": oracle only " + d.to_string());
      }
    }
  }
  out.passed = discrepancies == 0;
  out.summary = std::to_string(pairs) + " (e,r,target) cases, " + std::to_string(classes) +
                " all-positive classes, " + std::to_string(discrepancies) + " discrepancies";
  return out;
}

CheckResult check_formula_engine(const VerifyOptions& opts) {
  CheckResult out{3, "closed-form epsilon equals Delta/Lambda engine", false, {}, {}, 0};
  const auto s = run_hirzebruch_sweep(opts);
  out.passed = s.engine_mismatches == 0 && s.short_pairs == 0;
  out.summary = std::to_string(s.evaluated) + " admissible L, " + std::to_string(s.engine_mismatches) +
                " mismatches, " + std::to_string(s.short_pairs) + " (e,r) pairs short of the sample target";
  out.details = s.coverage;
  for (const auto& f : s.failures) note(out, f);
  return out;
}

CheckResult check_integrality(const VerifyOptions& opts) {
  CheckResult out{4, "integer eps at r=e+2, a non-integer eps at r=e+3", false, {}, {}, 0};
  const auto s = run_hirzebruch_sweep(opts);
  out.passed = s.non_integer_e2 == 0 && s.bad_denominator_e3 == 0 && s.non_integer_witness.has_value();
  out.summary = std::to_string(s.non_integer_e2) + " non-integer values at r=e+2, " +
                std::to_string(s.bad_denominator_e3) + " unexpected denominators at r=e+3, witness: " +
                s.non_integer_witness.value_or("none found");
  for (const auto& f : s.failures) note(out, f);
  return out;
}

CheckResult check_sqrt_bound(const VerifyOptions& opts) {
  CheckResult out{5, "eps^2 <= L^2 across all sweeps", false, {}, {}, 0};
  const auto h = run_hirzebruch_sweep(opts);
  const auto r = run_ruled_sweep(opts);
  const std::size_t bad = h.sqrt_failures + r.sqrt_failures;
  out.passed = bad == 0 && h.evaluated > 0 && r.evaluated > 0;
  out.summary = std::to_string(h.evaluated + r.evaluated) + " values, " + std::to_string(bad) + " failures";
  return out;
}

CheckResult check_negativity(const VerifyOptions& opts) {
  CheckResult out{6, "weighted bounded negativity bounds", false, {}, {}, 0};
  const std::int64_t e_max = opts.quick ? 3 : 6;
  std::size_t rows = 0, literal = 0, case_violations = 0, literal_a2 = 0;
  std::map<std::int64_t, std::size_t> literal_by_a;
  auto scan = [&](const ClassCatalog& cat, const std::string& where) {
    const auto report = bound_report(cat);
    const auto cases = case_bound_report(cat);
    for (std::size_t k = 0; k < report.rows.size(); ++k) {
      const auto& row = report.rows[k];
      if (!row.applicable || !std::holds_alternative<std::int64_t>(row.bound)) continue;
      ++rows;
      if (cases.rows[k].violated) {
        ++case_violations;
        note(out, "case analysis bound fails: " + where + " " + row.divisor.to_string());
      }
      if (!row.violated) continue;
      ++literal;
      ++literal_by_a[row.divisor.a];
      if (row.divisor.a >= 2) ++literal_a2;
      if (literal <= 6)
        note(out, "violation " + where + ": " + row.divisor.to_string() + " has C^2 = " +
                      std::to_string(row.self_intersection) + " < bound " +
                      std::to_string(std::get<std::int64_t>(row.bound)));
    }
  };
  for (std::int64_t e = 0; e <= e_max; ++e)
    for (std::size_t r = 0; static_cast<std::int64_t>(r) <= e + 4; ++r) {
      const std::string where = "F_" + std::to_string(e) + " r=" + std::to_string(r);
      scan(enumerate_minus_one_classes(e, r), where);
      scan(enumerate_minus_two_classes(e, r), where);
    }
  for (std::int64_t g = 1; g <= 3; ++g)
    for (std::int64_t e = 1; e <= 10; ++e)
      for (std::size_t r = 0; static_cast<std::int64_t>(r) <= e; ++r)
        scan(enumerate_negative_ruled(g, e, r),
             "ruled g=" + std::to_string(g) + " e=" + std::to_string(e) + " r=" + std::to_string(r));
  out.passed = literal == 0;
  std::string by_a;
  for (const auto& [a, n] : literal_by_a) by_a += " a=" + std::to_string(a) + ":" + std::to_string(n);
  out.summary = std::to_string(rows) + " negative classes, " + std::to_string(literal) +
                " violations of the stated bounds (by C.f:" + (by_a.empty() ? " none" : by_a) + "); " +
                std::to_string(literal_a2) + " with C.f >= 2; " + std::to_string(case_violations) +
                " violations of the per-case bounds";
  return out;
}

CheckResult check_transform(const VerifyOptions& opts) {
  CheckResult out{7, "elementary transform conserves C^2, K.C and catalog", false, {}, {}, 0};
  const std::int64_t e_max = opts.quick ? 3 : 6;
  std::size_t checked = 0, failures = 0, excluded = 0;
  for (std::int64_t e = 1; e <= e_max; ++e) {
    const auto r = static_cast<std::size_t>(e + 4);
    const auto ctx = SurfaceContext::hirzebruch(e, r);
    for (int target : {-1, -2}) {
      const auto source = target == -1 ? enumerate_minus_one_classes(e, r) : enumerate_minus_two_classes(e, r);
      const auto image_cat =
          target == -1 ? enumerate_minus_one_classes(e - 1, r - 1) : enumerate_minus_two_classes(e - 1, r - 1);
      for (const auto& entry : source) {
        const auto& c = entry.divisor;
        for (std::size_t i = 0; i < r; ++i) {
          if (c.m[i] != c.a) continue;
          TransformedClass t;
          try {
            t = elementary_transform(ctx, c, i);
          } catch (const PreconditionError&) {
            ++excluded;  // strict transform of C_e through p_i
            continue;
          }
          ++checked;
          const auto k0 = canonical_class(ctx);
          const auto k1 = canonical_class(t.context);
          const bool ok = self_intersection(ctx, c) == self_intersection(t.context, t.divisor) &&
                          intersect(ctx, c, k0) == intersect(t.context, t.divisor, k1) &&
                          image_cat.contains(t.divisor);
          if (!ok) {
            ++failures;
            note(out, "e=" + std::to_string(e) + " point " + std::to_string(i + 1) + ": " + c.to_string() +
                          " -> " + t.divisor.to_string());
          }
        }
      }
    }
  }
  out.passed = failures == 0 && checked > 0;
  out.summary = std::to_string(checked) + " admissible transforms, " + std::to_string(failures) +
                " failures, " + std::to_string(excluded) + " excluded (C_e through the transformed point)";
  return out;
}

CheckResult check_ruled(const VerifyOptions& opts) {
  CheckResult out{8, "ruled six-case formula equals proof Delta engine", false, {}, {}, 0};
  const auto s = run_ruled_sweep(opts);
  out.passed = s.mismatches == 0 && s.short_cases == 0;
  out.summary = std::to_string(s.evaluated) + " (case, L) samples, " + std::to_string(s.mismatches) +
                " mismatches, " + std::to_string(s.short_cases) + " (e, case) pairs short of the sample target";
  out.details = s.failures;
  return out;
}

CheckResult check_ab_shortcut(const VerifyOptions& opts) {
  CheckResult out{9, "sorted A(L), B(L) equal partition minima", false, {}, {}, 0};
  std::size_t cases = 0, bad = 0;
  std::mt19937_64 rng(opts.seed ^ 0x9u);
  auto compare = [&](std::int64_t e, const PolarizationL& l) {
    ++cases;
    if (a_of_l(e, l) != a_of_l_partitions(e, l) || b_of_l(e, l) != b_of_l_partitions(e, l)) {
      ++bad;
      note(out, "mismatch at " + describe(e, l));
    }
  };
  const std::int64_t exhaustive_max = opts.quick ? 2 : 4;
  const std::size_t random_per_e = opts.quick ? 500 : 20000;
  for (std::int64_t e = 0; e <= 6; ++e) {
    const auto r = static_cast<std::size_t>(e + 3);
    PolarizationL l{1, 0, std::vector<std::int64_t>(r, 1), true};
    if (e <= exhaustive_max) {
      // Every mu in {1..5}^r, beta varied alongside.
      while (true) {
        l.beta = uniform(rng, 1, 40);
        compare(e, l);
        std::size_t k = 0;
        while (k < r && l.mu[k] == 5) l.mu[k++] = 1;
        if (k == r) break;
        ++l.mu[k];
      }
    } else {
      for (std::size_t n = 0; n < random_per_e; ++n) {
        l.beta = uniform(rng, 1, 40);
        for (auto& v : l.mu) v = uniform(rng, 1, 5);
        compare(e, l);
      }
    }
  }
  out.passed = bad == 0 && (opts.quick || cases >= 10000);
  out.summary = std::to_string(cases) + " cases (exhaustive for e <= " + std::to_string(exhaustive_max) +
                ", " + std::to_string(random_per_e) + " random draws per e above), " + std::to_string(bad) +
                " mismatches";
  return out;
}

}  // namespace

std::optional<PolarizationL> draw_hirzebruch_l(std::int64_t e, std::size_t r, std::mt19937_64& rng) {
  PolarizationL l;
  l.alpha = uniform(rng, 1, 20);
  l.beta = uniform(rng, 1, 20);
  const std::int64_t mu_max = uniform(rng, 1, 20);
  l.mu.resize(r);
  for (auto& v : l.mu) v = uniform(rng, 1, mu_max);
  const auto ctx = SurfaceContext::hirzebruch(e, r);
  if (l.beta - e * l.alpha <= 0 || l_squared(ctx, l) <= 0) return std::nullopt;
  if (!passes_ampleness_screen(ctx, l)) return std::nullopt;
  return l;
}

std::optional<PolarizationL> draw_ruled_l(const SurfaceContext& ctx, std::mt19937_64& rng) {
  PolarizationL l;
  l.alpha = uniform(rng, 2, 20);
  l.beta = uniform(rng, ctx.e * l.alpha + 1, ctx.e * l.alpha + 20);
  l.mu.resize(ctx.r);
  for (auto& v : l.mu) v = uniform(rng, 1, l.alpha - 1);
  if (!passes_ruled_screen(ctx, l)) return std::nullopt;
  return l;
}

CheckResult run_check(int id, const VerifyOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult out;
  switch (id) {
    case 1: out = check_h0(); break;
    case 2: out = check_classification(opts); break;
    case 3: out = check_formula_engine(opts); break;
    case 4: out = check_integrality(opts); break;
    case 5: out = check_sqrt_bound(opts); break;
    case 6: out = check_negativity(opts); break;
    case 7: out = check_transform(opts); break;
    case 8: out = check_ruled(opts); break;
    case 9: out = check_ab_shortcut(opts); break;
    default: throw PreconditionError("check id must be in 1.." + std::to_string(kCheckCount));
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::vector<CheckResult> run_all_checks(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  for (int id = 1; id <= kCheckCount; ++id) out.push_back(run_check(id, opts));
  return out;
}

}  // namespace hirz
