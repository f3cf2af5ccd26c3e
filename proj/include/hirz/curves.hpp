#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hirz/lattice.hpp"

namespace hirz {

enum class FamilyLabel {
  Fiber,               // a = 0, b = 1
  SectionCe,           // a = 1, b = 0
  TypeAE,              // a = 1, b = e
  TypeAE1,             // a = 1, b = e + 1
  ExceptionalE,        // 2 <= a <= (e+3)/2, b = ae, weights a-1 / a
  ExceptionalDivisor,  // E_i
  Unclassified,        // numerical solution outside every listed family
};

const char* to_string(FamilyLabel label);

struct ClassFamily {
  FamilyLabel label = FamilyLabel::Unclassified;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::string multiplicity_pattern;
};

struct CatalogEntry {
  DivisorClass divisor;
  ClassFamily family;
  std::int64_t self_intersection = 0;
  std::string provenance;
};

/// Ordered, duplicate-free list of curve classes on one surface.
class ClassCatalog {
 public:
  explicit ClassCatalog(SurfaceContext ctx) : ctx_(ctx) {}

  const SurfaceContext& context() const noexcept { return ctx_; }
  const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// Appends; the self-intersection is computed here.
  void add(DivisorClass d, ClassFamily family, std::string provenance = {});
  /// Sort by class and drop repeated classes (first entry wins).
  void canonicalize();
  bool contains(const DivisorClass& d) const;
  std::vector<DivisorClass> classes() const;
  /// Recomputes every stored self-intersection; throws InvariantViolation.
  void check_invariants() const;

 private:
  SurfaceContext ctx_;
  std::vector<CatalogEntry> entries_;
};

/// (-1)-classes on F_e blown up at r <= e+4 points allowed by the
/// classification, expanded over all index subsets (unused points get
/// multiplicity 0). Includes the E_i.
ClassCatalog enumerate_minus_one_classes(std::int64_t e, std::size_t r);

/// (-2)-classes on F_e blown up at r <= e+4 points, same expansion.
ClassCatalog enumerate_minus_two_classes(std::int64_t e, std::size_t r);

/// Exhaustive search over 0 <= a <= a_max, 0 <= b <= b_max,
/// 0 <= m_i <= max(a, 1) for classes with C^2 = target and K.C = -2 - target,
/// subject to the effectivity shape (a,b) in {(0,1),(1,0)} or b >= ae.
ClassCatalog diophantine_oracle(std::int64_t e, std::size_t r, int target, std::int64_t a_max,
                                std::int64_t b_max);

/// Entries whose point multiplicities are all >= 1.
ClassCatalog all_positive_stratum(const ClassCatalog& catalog);

/// Negative curves on a ruled surface (invariant e > 0, genus g) blown up at
/// r <= e points: E_i, fiber transforms f - E_i and strict transforms of C_e
/// through any subset of the points.
ClassCatalog enumerate_negative_ruled(std::int64_t g, std::int64_t e, std::size_t r);

enum class NegativeKind {
  ExceptionalDivisor,
  StrictTransformCe,
  MinusOneClass,
  FiberThroughPoint,
  Counterexample,  // C^2 < 0 but none of the above: contradicts the theorem
};

const char* to_string(NegativeKind kind);

struct NegativeClassification {
  NegativeKind kind = NegativeKind::Counterexample;
  std::int64_t self_intersection = 0;
  std::int64_t canonical_degree = 0;
  std::optional<std::size_t> point;  // witnessing index for E_i / fiber types
  std::string detail;
};

/// Which kind of negative curve C can be, under the hypotheses of the
/// negativity theorems (Hirzebruch, r <= e+4, very general; or ruled with
/// e > 0, r <= e).
NegativeClassification classify_negative_class(const SurfaceContext& ctx, const DivisorClass& c);

}  // namespace hirz
