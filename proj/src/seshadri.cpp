#include "hirz/seshadri.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <tuple>
#include <numeric>

#include "hirz/detail/checked.hpp"
#include "hirz/detail/combinations.hpp"
#include "hirz/errors.hpp"

namespace hirz {

namespace ck = detail;

DivisorClass PolarizationL::as_class() const {
  DivisorClass d;
  d.a = alpha;
  d.b = beta;
  d.m = mu;
  return d;
}

PolarizationL PolarizationL::scaled(std::int64_t k) const {
  PolarizationL out = *this;
  out.alpha = ck::mul(alpha, k);
  out.beta = ck::mul(beta, k);
  for (auto& v : out.mu) v = ck::mul(v, k);
  return out;
}

bool RuledPosition::needs_index() const {
  return kind == RuledCase::OnFiber || kind == RuledCase::OnExceptional ||
         kind == RuledCase::SectionAndFiber || kind == RuledCase::FiberAndExceptional;
}

namespace {

void add_weighted(ClassCatalog& cat, std::int64_t a, std::int64_t b,
                  const std::vector<std::size_t>& ones, std::int64_t m_x, FamilyLabel label,
                  const std::string& pattern, const std::string& provenance) {
  DivisorClass d = DivisorClass::zero(cat.context());
  d.a = a;
  d.b = b;
  for (auto i : ones) d.m[i] = 1;
  d.m_x = m_x;
  cat.add(std::move(d), {label, a, b, pattern}, provenance);
}

// The three unit-weight families shared by Delta (r = e+2) and Lambda
// (r = e+3): f - E_x, C + ef - (e points) - E_x, C + (e+1)f - (k points) - E_x.
void add_unit_families(ClassCatalog& cat, std::int64_t e, std::size_t top_count) {
  const auto r = cat.context().r;
  add_weighted(cat, 0, 1, {}, 1, FamilyLabel::Fiber, "x only", "fiber through x");
  ck::for_each_subset(r, static_cast<std::size_t>(e), [&](const auto& s) {
    add_weighted(cat, 1, e, s, 1, e == 0 ? FamilyLabel::SectionCe : FamilyLabel::TypeAE,
                 std::to_string(e) + " points at 1, x at 1", "a=1, b=e through x");
  });
  ck::for_each_subset(r, top_count, [&](const auto& s) {
    add_weighted(cat, 1, e + 1, s, 1, FamilyLabel::TypeAE1,
                 std::to_string(top_count) + " points at 1, x at 1", "a=1, b=e+1 through x");
  });
}

std::vector<std::int64_t> sorted_desc(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

std::int64_t sum_top(const std::vector<std::int64_t>& desc, std::size_t k) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < k && i < desc.size(); ++i) s = ck::add(s, desc[i]);
  return s;
}

void require_mu_length(const PolarizationL& l, std::size_t r) {
  if (l.mu.size() != r)
    throw StructuralError("polarization has " + std::to_string(l.mu.size()) +
                          " multiplicities, expected r = " + std::to_string(r));
}

void require_lambda_shape(std::int64_t e, const PolarizationL& l) {
  if (e < 0) throw PreconditionError("e must be >= 0");
  require_mu_length(l, static_cast<std::size_t>(e + 3));
}

std::int64_t pair_with(const SurfaceContext& base, const PolarizationL& l, const DivisorClass& c) {
  DivisorClass lc = l.as_class();
  return intersect(base, lc, c);
}

// Catalogs depend only on (kind, e, r), so repeated screens share them.
// Map nodes are stable, so returned references stay valid.
const ClassCatalog& memo_catalog(int kind, std::int64_t e, std::size_t r) {
  static std::mutex mu;
  static std::map<std::tuple<int, std::int64_t, std::size_t>, ClassCatalog> cache;
  const std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_tuple(kind, e, r);
  auto it = cache.find(key);
  if (it == cache.end()) {
    ClassCatalog cat = kind == 0   ? enumerate_minus_one_classes(e, r)
                       : kind == 1 ? delta_set_r_e2(e)
                                   : lambda_set_r_e3(e);
    it = cache.emplace(key, std::move(cat)).first;
  }
  return it->second;
}

struct Term {
  std::string name;
  Rational value;
};

// Fills epsilon, branch and tied branches from a list of candidate terms.
SeshadriResult minimize_terms(const std::vector<Term>& terms) {
  SeshadriResult out;
  bool have = false;
  for (const auto& t : terms) {
    if (!have || t.value < out.epsilon) {
      out.epsilon = t.value;
      have = true;
    }
  }
  for (const auto& t : terms) {
    if (t.value == out.epsilon) {
      if (out.branch.empty()) out.branch = t.name;
      out.tied_branches.push_back(t.name);
    }
  }
  return out;
}

// Classes of the catalog on which pi^*L - eps E_x vanishes.
std::vector<DivisorClass> argmin_in(const PolarizationL& l, const ClassCatalog& catalog,
                                    const Rational& eps) {
  const auto base = catalog.context().without_extra_point();
  std::vector<DivisorClass> out;
  for (const auto& entry : catalog) {
    const std::int64_t mx = *entry.divisor.m_x;
    if (mx <= 0) continue;
    if (Rational(pair_with(base, l, entry.divisor.stripped())) == eps * Rational(mx))
      out.push_back(entry.divisor);
  }
  return out;
}

void require_hirzebruch_hypotheses(const SurfaceContext& ctx, const PolarizationL& l,
                                   std::int64_t offset) {
  if (ctx.kind != SurfaceKind::Hirzebruch)
    throw PreconditionError("closed-form evaluator expects a Hirzebruch context");
  if (static_cast<std::int64_t>(ctx.r) != ctx.e + offset)
    throw UnsupportedRangeError("this closed form needs r = e + " + std::to_string(offset) +
                                " (got e = " + std::to_string(ctx.e) +
                                ", r = " + std::to_string(ctx.r) + ")");
  require_mu_length(l, ctx.r);
  if (!ctx.very_general)
    throw HypothesisError("Seshadri formula needs the points and x in very general position");
  if (!l.ample_asserted) throw HypothesisError("L must be declared ample");
  if (!passes_ampleness_screen(ctx.without_extra_point(), l))
    throw HypothesisError("L fails the necessary ampleness screen");
}

std::optional<Rational> weighted_min(std::int64_t e, const PolarizationL& l, bool family_b,
                                     bool brute_force) {
  require_lambda_shape(e, l);
  const std::size_t r = l.mu.size();
  const auto desc = sorted_desc(l.mu);
  const std::int64_t total = std::accumulate(l.mu.begin(), l.mu.end(), std::int64_t{0},
                                             [](std::int64_t x, std::int64_t y) { return ck::add(x, y); });
  std::optional<Rational> best;
  auto consider = [&](const Rational& v) {
    if (!best || v < *best) best = v;
  };
  for (std::int64_t a = 2;; ++a) {
    const std::int64_t heavy_count = family_b ? e - 2 * a + 2 : e - 2 * a + 3;
    if (heavy_count < 0) break;
    const std::int64_t den = family_b ? a : a - 1;
    // numerator = a*beta - (a-1)*sum(all) - sum(heavy)
    auto value_for = [&](std::int64_t heavy_sum) {
      std::int64_t num = ck::mul(a, l.beta);
      num = ck::sub(num, ck::mul(a - 1, total));
      num = ck::sub(num, heavy_sum);
      return Rational(Rational::Integer(num), Rational::Integer(den));
    };
    if (brute_force) {
      ck::for_each_subset(r, static_cast<std::size_t>(heavy_count), [&](const auto& s) {
        std::int64_t heavy_sum = 0;
        for (auto i : s) heavy_sum = ck::add(heavy_sum, l.mu[i]);
        consider(value_for(heavy_sum));
      });
    } else {
      consider(value_for(sum_top(desc, static_cast<std::size_t>(heavy_count))));
    }
  }
  return best;
}

}  // namespace

ClassCatalog delta_set_r_e2(std::int64_t e) {
  if (e < 0) throw PreconditionError("e must be >= 0");
  const auto r = static_cast<std::size_t>(e + 2);
  ClassCatalog cat(SurfaceContext::hirzebruch(e, r, true));
  add_unit_families(cat, e, r);
  cat.canonicalize();
  return cat;
}

ClassCatalog lambda_set_r_e3(std::int64_t e) {
  if (e < 0) throw PreconditionError("e must be >= 0");
  const auto r = static_cast<std::size_t>(e + 3);
  ClassCatalog cat(SurfaceContext::hirzebruch(e, r, true));
  add_unit_families(cat, e, static_cast<std::size_t>(e + 2));

  // Weighted classes: the r = e+4 family with x at weight a-1 (first) or a
  // (second). The second exists only when e - 2a + 2 >= 0.
  for (std::int64_t a = 2; 2 * a <= e + 3; ++a) {
    const std::int64_t b = ck::mul(a, e);
    for (int which = 0; which < 2; ++which) {
      const std::int64_t heavy = which == 0 ? e - 2 * a + 3 : e - 2 * a + 2;
      if (heavy < 0) continue;
      const std::int64_t mx = which == 0 ? a - 1 : a;
      const std::string pat = std::to_string(r - heavy) + " points at " + std::to_string(a - 1) +
                              ", " + std::to_string(heavy) + " points at " + std::to_string(a) +
                              ", x at " + std::to_string(mx);
      ck::for_each_subset(r, static_cast<std::size_t>(heavy), [&](const auto& s) {
        DivisorClass d = DivisorClass::zero(cat.context());
        d.a = a;
        d.b = b;
        std::fill(d.m.begin(), d.m.end(), a - 1);
        for (auto i : s) d.m[i] = a;
        d.m_x = mx;
        cat.add(std::move(d), {FamilyLabel::ExceptionalE, a, b, pat},
                "weighted family through x: effective, irreducibility unknown");
      });
    }
  }
  cat.canonicalize();
  return cat;
}

ClassCatalog ruled_delta(const SurfaceContext& ctx, const RuledPosition& pos) {
  if (ctx.kind != SurfaceKind::Ruled) throw PreconditionError("ruled_delta expects a ruled context");
  if (pos.needs_index() != pos.i.has_value())
    throw StructuralError("position case " + std::to_string(static_cast<int>(pos.kind)) +
                          (pos.needs_index() ? " needs a point index" : " takes no point index"));
  if (pos.i && *pos.i >= ctx.r) throw StructuralError("point index out of range");

  ClassCatalog cat(ctx.with_extra_point());
  const auto& x_ctx = cat.context();
  auto fiber_x = [&] {
    DivisorClass d = DivisorClass::fiber(x_ctx);
    d.m_x = 1;
    return d;
  };
  auto section_x = [&] {
    DivisorClass d = DivisorClass::section(x_ctx);
    d.m_x = 1;
    return d;
  };
  auto fiber_i_x = [&] {  // strict transform of F_i through x
    DivisorClass d = DivisorClass::fiber(x_ctx);
    d.m[*pos.i] = 1;
    d.m_x = 1;
    return d;
  };
  auto exceptional_i_x = [&] {  // strict transform of E_i through x
    DivisorClass d = DivisorClass::exceptional(x_ctx, *pos.i);
    d.m_x = 1;
    return d;
  };
  // Curves of numerical class f through x are the only other fixed components
  // of -K, so these lists are complete.
  switch (pos.kind) {
    case RuledCase::Generic:
      cat.add(fiber_x(), {FamilyLabel::Fiber, 0, 1, "x at 1"}, "fiber through x");
      break;
    case RuledCase::OnFiber:
      cat.add(fiber_i_x(), {FamilyLabel::Fiber, 0, 1, "p_i and x at 1"}, "fiber F_i through x");
      break;
    case RuledCase::OnExceptional:
      cat.add(exceptional_i_x(), {FamilyLabel::ExceptionalDivisor, 0, 0, "E_i through x"},
              "exceptional divisor through x");
      break;
    case RuledCase::OnSection:
      cat.add(fiber_x(), {FamilyLabel::Fiber, 0, 1, "x at 1"}, "fiber through x");
      cat.add(section_x(), {FamilyLabel::SectionCe, 1, 0, "x at 1"}, "C_e through x");
      break;
    case RuledCase::SectionAndFiber:
      cat.add(section_x(), {FamilyLabel::SectionCe, 1, 0, "x at 1"}, "C_e through x");
      cat.add(fiber_i_x(), {FamilyLabel::Fiber, 0, 1, "p_i and x at 1"}, "fiber F_i through x");
      break;
    case RuledCase::FiberAndExceptional:
      cat.add(fiber_i_x(), {FamilyLabel::Fiber, 0, 1, "p_i and x at 1"}, "fiber F_i through x");
      cat.add(exceptional_i_x(), {FamilyLabel::ExceptionalDivisor, 0, 0, "E_i through x"},
              "exceptional divisor through x");
      break;
  }
  cat.canonicalize();
  return cat;
}

std::optional<Rational> a_of_l(std::int64_t e, const PolarizationL& l) {
  return weighted_min(e, l, false, false);
}

std::optional<Rational> b_of_l(std::int64_t e, const PolarizationL& l) {
  return weighted_min(e, l, true, false);
}

std::optional<Rational> a_of_l_partitions(std::int64_t e, const PolarizationL& l) {
  return weighted_min(e, l, false, true);
}

std::optional<Rational> b_of_l_partitions(std::int64_t e, const PolarizationL& l) {
  return weighted_min(e, l, true, true);
}

bool passes_ampleness_screen(const SurfaceContext& ctx, const PolarizationL& l) {
  if (ctx.kind != SurfaceKind::Hirzebruch)
    throw PreconditionError("ampleness screen expects a Hirzebruch context");
  if (ctx.has_extra_point) throw PreconditionError("ampleness screen runs on X_P, not on X_P,x");
  require_mu_length(l, ctx.r);
  if (static_cast<std::int64_t>(ctx.r) > ctx.e + 4)
    throw UnsupportedRangeError("ampleness screen covers r <= e + 4 only");

  const DivisorClass lc = l.as_class();
  if (intersect(ctx, lc, lc) <= 0) return false;
  if (intersect(ctx, lc, DivisorClass::section(ctx)) <= 0) return false;
  if (intersect(ctx, lc, DivisorClass::fiber(ctx)) <= 0) return false;
  // Every (-1)-class listed is effective, so an ample L is positive on it.
  for (const auto& entry : memo_catalog(0, ctx.e, ctx.r))
    if (intersect(ctx, lc, entry.divisor) <= 0) return false;

  const auto offset = static_cast<std::int64_t>(ctx.r) - ctx.e;
  if (offset == 2 || offset == 3) {
    const auto& candidates = memo_catalog(offset == 2 ? 1 : 2, ctx.e, 0);
    for (const auto& entry : candidates)
      if (intersect(ctx, lc, entry.divisor.stripped()) <= 0) return false;
  }
  return true;
}

bool passes_ruled_screen(const SurfaceContext& ctx, const PolarizationL& l) {
  if (ctx.kind != SurfaceKind::Ruled) throw PreconditionError("ruled screen expects a ruled context");
  const auto base = ctx.without_extra_point();
  require_mu_length(l, base.r);
  const DivisorClass lc = l.as_class();
  if (intersect(base, lc, lc) <= 0) return false;
  if (intersect(base, lc, DivisorClass::section(base)) <= 0) return false;
  if (l.alpha <= 0) return false;
  for (auto mu : l.mu)
    if (mu <= 0 || mu >= l.alpha) return false;
  return true;
}

SeshadriResult epsilon_r_e2(const SurfaceContext& ctx, const PolarizationL& l) {
  require_hirzebruch_hypotheses(ctx, l, 2);
  const std::int64_t e = ctx.e;
  const auto desc = sorted_desc(l.mu);
  std::vector<Term> terms{
      {"alpha", Rational(l.alpha)},
      {"beta-term", Rational(ck::sub(l.beta, sum_top(desc, static_cast<std::size_t>(e))))},
      {"alpha+beta-term", Rational(ck::sub(ck::add(l.alpha, l.beta), sum_top(desc, desc.size())))},
  };
  SeshadriResult out = minimize_terms(terms);
  out.argmin_classes = argmin_in(l, memo_catalog(1, e, 0), out.epsilon);
  return out;
}

SeshadriResult epsilon_r_e3(const SurfaceContext& ctx, const PolarizationL& l) {
  require_hirzebruch_hypotheses(ctx, l, 3);
  const std::int64_t e = ctx.e;
  const auto desc = sorted_desc(l.mu);
  // For e = 0 the middle term is beta and the last sums the two largest mu.
  std::vector<Term> terms{
      {"alpha", Rational(l.alpha)},
      {"beta-term", Rational(ck::sub(l.beta, sum_top(desc, static_cast<std::size_t>(e))))},
      {"alpha+beta-term",
       Rational(ck::sub(ck::add(l.alpha, l.beta), sum_top(desc, static_cast<std::size_t>(e + 2))))},
  };
  if (auto a = a_of_l(e, l)) terms.push_back({"A", *a});
  if (auto b = b_of_l(e, l)) terms.push_back({"B", *b});
  SeshadriResult out = minimize_terms(terms);
  out.argmin_classes = argmin_in(l, memo_catalog(2, e, 0), out.epsilon);
  return out;
}

SeshadriResult generic_epsilon(const PolarizationL& l, const ClassCatalog& catalog) {
  const auto& ctx = catalog.context();
  if (!ctx.has_extra_point)
    throw PreconditionError("generic_epsilon needs a catalog on the blowup at x");
  const auto base = ctx.without_extra_point();
  require_mu_length(l, base.r);

  std::optional<Rational> best;
  for (const auto& entry : catalog) {
    const std::int64_t mx = *entry.divisor.m_x;
    if (mx < 0) throw PreconditionError("catalog class " + entry.divisor.to_string() + " has m_x < 0");
    const std::int64_t p = pair_with(base, l, entry.divisor.stripped());
    if (mx == 0) {
      if (p < 0)
        throw HypothesisError("L is negative on " + entry.divisor.to_string() + "; L is not ample");
      continue;
    }
    const Rational v{Rational::Integer(p), Rational::Integer(mx)};
    if (!best || v < *best) best = v;
  }
  if (!best) throw PreconditionError("supremum undefined: catalog has no class through x");
  if (best->sign() < 0) throw HypothesisError("L is negative on a curve through x; L is not ample");

  SeshadriResult out;
  out.epsilon = *best;
  out.argmin_classes = argmin_in(l, catalog, out.epsilon);
  for (const auto& entry : catalog) {
    if (std::find(out.argmin_classes.begin(), out.argmin_classes.end(), entry.divisor) ==
        out.argmin_classes.end())
      continue;
    std::string label = to_string(entry.family.label);
    if (out.branch.empty()) out.branch = label;
    if (std::find(out.tied_branches.begin(), out.tied_branches.end(), label) ==
        out.tied_branches.end())
      out.tied_branches.push_back(label);
  }
  return out;
}

SeshadriResult epsilon_ruled(const SurfaceContext& ctx, const PolarizationL& l,
                             const RuledPosition& pos) {
  if (ctx.kind != SurfaceKind::Ruled) throw PreconditionError("epsilon_ruled expects a ruled context");
  const auto base = ctx.without_extra_point();
  if (static_cast<std::int64_t>(base.r) >= base.e + 2 - 3 * base.g)
    throw HypothesisError("ruled formula needs r < e + 2 - 3g (got e = " + std::to_string(base.e) +
                          ", g = " + std::to_string(base.g) + ", r = " + std::to_string(base.r) + ")");
  if (!base.very_general)
    throw HypothesisError("ruled formula needs points in distinct fibers and off C_e");
  require_mu_length(l, base.r);
  if (pos.needs_index() != pos.i.has_value())
    throw StructuralError("position case " + std::to_string(static_cast<int>(pos.kind)) +
                          (pos.needs_index() ? " needs a point index" : " takes no point index"));
  if (pos.i && *pos.i >= base.r) throw StructuralError("point index out of range");
  if (!l.ample_asserted) throw HypothesisError("L must be declared ample");
  if (!passes_ruled_screen(base, l)) throw HypothesisError("L fails the necessary ampleness screen");

  const Rational alpha(l.alpha);
  const Rational section_term(ck::sub(l.beta, ck::mul(l.alpha, base.e)));
  std::vector<Term> terms;
  switch (pos.kind) {
    case RuledCase::Generic:
      terms = {{"alpha", alpha}};
      break;
    case RuledCase::OnFiber:
      terms = {{"alpha-mu_i", Rational(l.alpha - l.mu[*pos.i])}};
      break;
    case RuledCase::OnExceptional:
      terms = {{"mu_i", Rational(l.mu[*pos.i])}};
      break;
    case RuledCase::OnSection:
      terms = {{"beta-alpha*e", section_term}, {"alpha", alpha}};
      break;
    case RuledCase::SectionAndFiber:
      terms = {{"beta-alpha*e", section_term}, {"alpha-mu_i", Rational(l.alpha - l.mu[*pos.i])}};
      break;
    case RuledCase::FiberAndExceptional:
      terms = {{"alpha-mu_i", Rational(l.alpha - l.mu[*pos.i])}, {"mu_i", Rational(l.mu[*pos.i])}};
      break;
  }
  SeshadriResult out = minimize_terms(terms);
  out.argmin_classes = argmin_in(l, ruled_delta(base, pos), out.epsilon);
  return out;
}

bool nef_check(const SurfaceContext& ctx, const DivisorClass& d, const ClassCatalog& catalog,
               const DivisorClass& h) {
  if (intersect(ctx, d, d) < 0) return false;
  if (intersect(ctx, d, h) <= 0) return false;
  for (const auto& entry : catalog)
    if (intersect(ctx, d, entry.divisor) < 0) return false;
  return true;
}

DivisorClass scaled_lift(const PolarizationL& l, const Rational& eps) {
  std::int64_t num = 0, den = 0;
  if (!fits_int64(eps.num(), num) || !fits_int64(eps.den(), den))
    throw OverflowError("scaled_lift");
  DivisorClass d = l.as_class().scaled(den);
  d.m_x = num;
  return d;
}

bool sqrt_bound_holds(const SurfaceContext& ctx, const PolarizationL& l, const Rational& eps) {
  const auto base = ctx.without_extra_point();
  const DivisorClass lc = l.as_class();
  return eps * eps <= Rational(intersect(base, lc, lc));
}

}  // namespace hirz
