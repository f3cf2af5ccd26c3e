#include "hirz/curves.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "hirz/detail/checked.hpp"
#include "hirz/detail/combinations.hpp"
#include "hirz/errors.hpp"

namespace hirz {

namespace ck = detail;

const char* to_string(FamilyLabel label) {
  switch (label) {
    case FamilyLabel::Fiber: return "fiber";
    case FamilyLabel::SectionCe: return "section";
    case FamilyLabel::TypeAE: return "type-1-e";
    case FamilyLabel::TypeAE1: return "type-1-e+1";
    case FamilyLabel::ExceptionalE: return "weighted-family";
    case FamilyLabel::ExceptionalDivisor: return "exceptional";
    case FamilyLabel::Unclassified: return "unclassified";
  }
  return "?";
}

const char* to_string(NegativeKind kind) {
  switch (kind) {
    case NegativeKind::ExceptionalDivisor: return "exceptional-divisor";
    case NegativeKind::StrictTransformCe: return "strict-transform-Ce";
    case NegativeKind::MinusOneClass: return "minus-one-class";
    case NegativeKind::FiberThroughPoint: return "fiber-through-point";
    case NegativeKind::Counterexample: return "counterexample";
  }
  return "?";
}

void ClassCatalog::add(DivisorClass d, ClassFamily family, std::string provenance) {
  check_dimensions(ctx_, d);
  std::int64_t self = intersect(ctx_, d, d);
  entries_.push_back({std::move(d), std::move(family), self, std::move(provenance)});
}

void ClassCatalog::canonicalize() {
  std::stable_sort(entries_.begin(), entries_.end(),
                   [](const CatalogEntry& x, const CatalogEntry& y) { return x.divisor < y.divisor; });
  auto last = std::unique(entries_.begin(), entries_.end(),
                          [](const CatalogEntry& x, const CatalogEntry& y) {
                            return x.divisor == y.divisor;
                          });
  entries_.erase(last, entries_.end());
}

bool ClassCatalog::contains(const DivisorClass& d) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const CatalogEntry& x) { return x.divisor == d; });
}

std::vector<DivisorClass> ClassCatalog::classes() const {
  std::vector<DivisorClass> out;
  out.reserve(entries_.size());
  for (const auto& entry : entries_) out.push_back(entry.divisor);
  return out;
}

void ClassCatalog::check_invariants() const {
  for (const auto& entry : entries_) {
    if (intersect(ctx_, entry.divisor, entry.divisor) != entry.self_intersection)
      throw InvariantViolation("catalog entry " + entry.divisor.to_string() +
                               " has a stale self-intersection");
  }
}

namespace {

std::string pattern(std::size_t count_low, std::int64_t low, std::size_t count_high,
                    std::int64_t high) {
  std::ostringstream os;
  os << count_low << " points at " << low;
  if (count_high > 0) os << ", " << count_high << " points at " << high;
  return os.str();
}

// Adds a*C + b*f - sum_{i in S} E_i for every s-subset S.
void add_unit_weight_family(ClassCatalog& cat, std::int64_t a, std::int64_t b, std::int64_t s,
                            FamilyLabel label, const std::string& provenance) {
  const auto& ctx = cat.context();
  if (s < 0 || static_cast<std::size_t>(s) > ctx.r) return;
  ck::for_each_subset(ctx.r, static_cast<std::size_t>(s), [&](const auto& subset) {
    DivisorClass d = DivisorClass::zero(ctx);
    d.a = a;
    d.b = b;
    for (auto i : subset) d.m[i] = 1;
    cat.add(std::move(d), {label, a, b, pattern(subset.size(), 1, 0, 0)}, provenance);
  });
}

void require_classified_range(std::int64_t e, std::size_t r) {
  if (e < 0) throw PreconditionError("e must be >= 0");
  if (static_cast<std::int64_t>(r) > e + 4)
    throw UnsupportedRangeError("negative curves are classified only for r <= e + 4 (got e = " +
                                std::to_string(e) + ", r = " + std::to_string(r) + ")");
}

FamilyLabel family_for(std::int64_t e, std::int64_t a, std::int64_t b) {
  if (a == 0 && b == 1) return FamilyLabel::Fiber;
  if (a == 1 && b == 0) return FamilyLabel::SectionCe;
  if (a == 1 && b == e) return FamilyLabel::TypeAE;
  if (a == 1 && b == e + 1) return FamilyLabel::TypeAE1;
  if (a >= 2 && b == a * e) return FamilyLabel::ExceptionalE;
  return FamilyLabel::Unclassified;
}

}  // namespace

ClassCatalog enumerate_minus_one_classes(std::int64_t e, std::size_t r) {
  require_classified_range(e, r);
  auto ctx = SurfaceContext::hirzebruch(e, r);
  ClassCatalog cat(ctx);

  for (std::size_t i = 0; i < r; ++i)
    cat.add(DivisorClass::exceptional(ctx, i),
            {FamilyLabel::ExceptionalDivisor, 0, 0, "one point at -1"}, "exceptional divisor");

  // Each family has a fixed number s of points with multiplicity 1, read off
  // from sum m_i = 2a + 2b - ae - 1 = sum m_i^2 with m_i <= a = 1.
  add_unit_weight_family(cat, 0, 1, 1, FamilyLabel::Fiber, "(-1) fiber through one point");
  add_unit_weight_family(cat, 1, 0, 1 - e, FamilyLabel::SectionCe, "(-1) section");
  add_unit_weight_family(cat, 1, e, e + 1, FamilyLabel::TypeAE, "(-1) a=1, b=e");
  add_unit_weight_family(cat, 1, e + 1, e + 3, FamilyLabel::TypeAE1, "(-1) a=1, b=e+1");

  // r = e+4, e >= 1: aC + aef with 2a+1 points at a-1 and e-2a+3 at a.
  if (e >= 1 && static_cast<std::int64_t>(r) == e + 4) {
    for (std::int64_t a = 2; 2 * a <= e + 3; ++a) {
      const auto heavy = static_cast<std::size_t>(e - 2 * a + 3);
      ck::for_each_subset(r, heavy, [&](const auto& subset) {
        const std::int64_t b = ck::mul(a, e);
        DivisorClass d = DivisorClass::zero(ctx);
        d.a = a;
        d.b = b;
        std::fill(d.m.begin(), d.m.end(), a - 1);
        for (auto i : subset) d.m[i] = a;
        cat.add(std::move(d),
                {FamilyLabel::ExceptionalE, a, b, pattern(r - heavy, a - 1, heavy, a)},
                "(-1) r=e+4 weighted family: effective, irreducibility unknown");
      });
    }
  }
  cat.canonicalize();
  return cat;
}

ClassCatalog enumerate_minus_two_classes(std::int64_t e, std::size_t r) {
  require_classified_range(e, r);
  auto ctx = SurfaceContext::hirzebruch(e, r);
  ClassCatalog cat(ctx);
  // sum m_i = 2a + 2b - ae = sum m_i^2.
  add_unit_weight_family(cat, 0, 1, 2, FamilyLabel::Fiber, "(-2) fiber through two points");
  add_unit_weight_family(cat, 1, 0, 2 - e, FamilyLabel::SectionCe, "(-2) section");
  add_unit_weight_family(cat, 1, e, e + 2, FamilyLabel::TypeAE, "(-2) a=1, b=e");
  add_unit_weight_family(cat, 1, e + 1, e + 4, FamilyLabel::TypeAE1, "(-2) a=1, b=e+1");
  cat.canonicalize();
  return cat;
}

ClassCatalog diophantine_oracle(std::int64_t e, std::size_t r, int target, std::int64_t a_max,
                                std::int64_t b_max) {
  if (target != -1 && target != -2) throw PreconditionError("oracle target must be -1 or -2");
  if (a_max < 0 || b_max < 0) throw PreconditionError("oracle bounds must be >= 0");
  if (e < 0) throw PreconditionError("e must be >= 0");
  auto ctx = SurfaceContext::hirzebruch(e, r);
  ClassCatalog cat(ctx);

  std::vector<std::int64_t> m(r, 0);
  for (std::int64_t a = 0; a <= a_max; ++a) {
    for (std::int64_t b = 0; b <= b_max; ++b) {
      bool shape_ok = (a == 0 && b == 1) || (a == 1 && b == 0) || (a >= 1 && b >= a * e);
      if (!shape_ok) continue;
      // C^2 = target, K.C = -2 - target.
      const std::int64_t sum = 2 * a + 2 * b - a * e - 2 - target;
      const std::int64_t sum_sq = 2 * a * b - a * a * e - target;
      const std::int64_t cap = std::max<std::int64_t>(a, 1);

      // Depth-first over m_0..m_{r-1}, pruning with conditions every
      // completion must meet (box, m <= m^2 <= cap*m, Cauchy-Schwarz).
      std::function<void(std::size_t, std::int64_t, std::int64_t)> rec =
          [&](std::size_t pos, std::int64_t s_rem, std::int64_t q_rem) {
            const auto k = static_cast<std::int64_t>(r - pos);
            if (s_rem < 0 || q_rem < 0 || s_rem > q_rem || q_rem > cap * s_rem ||
                s_rem > k * cap || s_rem * s_rem > k * q_rem)
              return;
            if (k == 0) {
              DivisorClass d = DivisorClass::zero(ctx);
              d.a = a;
              d.b = b;
              d.m = m;
              cat.add(std::move(d), {family_for(e, a, b), a, b, {}}, "diophantine oracle");
              return;
            }
            for (std::int64_t v = 0; v <= cap; ++v) {
              m[pos] = v;
              rec(pos + 1, s_rem - v, q_rem - v * v);
            }
            m[pos] = 0;
          };
      rec(0, sum, sum_sq);
    }
  }
  cat.canonicalize();
  return cat;
}

ClassCatalog all_positive_stratum(const ClassCatalog& catalog) {
  ClassCatalog out(catalog.context());
  for (const auto& entry : catalog) {
    if (std::all_of(entry.divisor.m.begin(), entry.divisor.m.end(),
                    [](std::int64_t v) { return v >= 1; }))
      out.add(entry.divisor, entry.family, entry.provenance);
  }
  return out;
}

ClassCatalog enumerate_negative_ruled(std::int64_t g, std::int64_t e, std::size_t r) {
  if (e <= 0) throw HypothesisError("ruled negative-curve list needs invariant e > 0");
  if (static_cast<std::int64_t>(r) > e)
    throw UnsupportedRangeError("ruled negative-curve list covers r <= e only");
  auto ctx = SurfaceContext::ruled(g, e, r);
  ClassCatalog cat(ctx);
  for (std::size_t i = 0; i < r; ++i)
    cat.add(DivisorClass::exceptional(ctx, i),
            {FamilyLabel::ExceptionalDivisor, 0, 0, "one point at -1"}, "exceptional divisor");
  add_unit_weight_family(cat, 0, 1, 1, FamilyLabel::Fiber, "fiber through a blown-up point");
  for (std::size_t s = 0; s <= r; ++s)
    add_unit_weight_family(cat, 1, 0, static_cast<std::int64_t>(s), FamilyLabel::SectionCe,
                           "strict transform of C_e");
  cat.canonicalize();
  return cat;
}

NegativeClassification classify_negative_class(const SurfaceContext& ctx, const DivisorClass& c) {
  check_dimensions(ctx, c);
  if (ctx.has_extra_point)
    throw PreconditionError("classify_negative_class works on X_P; drop the extra point");
  if (ctx.kind == SurfaceKind::Hirzebruch) {
    if (!ctx.very_general)
      throw HypothesisError("classification of negative curves needs very general points");
    if (static_cast<std::int64_t>(ctx.r) > ctx.e + 4)
      throw UnsupportedRangeError("negative curves on F_e are classified only for r <= e + 4");
  } else {
    if (ctx.e <= 0) throw HypothesisError("ruled classification needs invariant e > 0");
    if (static_cast<std::int64_t>(ctx.r) > ctx.e)
      throw UnsupportedRangeError("ruled classification covers r <= e only");
  }

  NegativeClassification out;
  out.self_intersection = intersect(ctx, c, c);
  out.canonical_degree = intersect(ctx, c, canonical_class(ctx));
  if (out.self_intersection >= 0)
    throw PreconditionError("class " + c.to_string() + " has non-negative self-intersection");

  std::size_t negatives = 0, ones = 0, nonzero = 0;
  std::optional<std::size_t> neg_at, one_at;
  for (std::size_t i = 0; i < c.m.size(); ++i) {
    if (c.m[i] != 0) ++nonzero;
    if (c.m[i] < 0) { ++negatives; neg_at = i; }
    if (c.m[i] == 1) { ++ones; one_at = i; }
  }

  if (c.a == 0 && c.b == 0 && nonzero == 1 && negatives == 1 && c.m[*neg_at] == -1) {
    out.kind = NegativeKind::ExceptionalDivisor;
    out.point = neg_at;
    return out;
  }
  if (negatives > 0) {
    out.detail = "negative multiplicity on a class that is not an exceptional divisor";
    return out;
  }
  if (c.a == 1 && c.b == 0) {
    out.kind = NegativeKind::StrictTransformCe;
    return out;
  }
  if (ctx.kind == SurfaceKind::Hirzebruch) {
    if (out.self_intersection == -1 && out.canonical_degree == -1) {
      out.kind = NegativeKind::MinusOneClass;
      if (c.a == 0 && ones == 1 && nonzero == 1) out.point = one_at;
      return out;
    }
  } else if (c.a == 0 && c.b == 1 && ones == 1 && nonzero == 1) {
    out.kind = NegativeKind::FiberThroughPoint;
    out.point = one_at;
    return out;
  }
  out.detail = "negative class is neither C_e-type nor of the listed kinds";
  return out;
}

}  // namespace hirz
