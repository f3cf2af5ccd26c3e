#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hirz/curves.hpp"
#include "hirz/errors.hpp"
#include "hirz/lattice.hpp"

namespace hirz {

/// The bound does not apply: C is an exceptional divisor.
struct Exempt {
  friend bool operator==(Exempt, Exempt) { return true; }
};

using BoundValue = std::variant<Exempt, std::int64_t>;

/// E_i (or E_x): a = b = 0 and a single multiplicity equal to -1.
bool is_exceptional_divisor(const DivisorClass& c);

/// min(-2, -e-r) + (e + 2 - floor((r+e)/2)) * a, with a = C.f_e.
BoundValue wbnc_bound_hirzebruch(std::int64_t e, std::int64_t r, const DivisorClass& c);

/// max{2g-1, 2g-1+e, g + floor((r+e)/2)}, exact floor for negative e.
std::int64_t ruled_lambda(std::int64_t g, std::int64_t e, std::int64_t r);

/// min(-2, -r) + (e + 2 - lambda - 2g) * a.
BoundValue wbnc_bound_ruled(std::int64_t g, std::int64_t e, std::int64_t r, const DivisorClass& c);

/// What the case analysis of the proofs establishes, split by a = C.f_e:
/// a >= 2 gives -2 + (e + 2 - lambda) a (lambda as in the statement, with the
/// extra -2g on ruled surfaces); a = 1 gives -e-r on F_e and -r - max(e, 0)
/// on ruled surfaces; a = 0 gives -r.
BoundValue case_bound(const SurfaceContext& ctx, const DivisorClass& c);

struct BoundRow {
  DivisorClass divisor;
  std::int64_t self_intersection = 0;
  BoundValue bound;
  /// False when C^2 >= 0: the statements only concern negative curves.
  bool applicable = true;
  std::optional<std::int64_t> slack;  // C^2 - bound
  bool violated = false;
};

struct BoundReport {
  SurfaceContext context;
  std::vector<BoundRow> rows;

  std::size_t violations() const;
  bool ok() const { return violations() == 0; }
};

/// Evaluates the statement bound for every entry of the catalog, in order.
BoundReport bound_report(const ClassCatalog& catalog);
/// Same rows against case_bound.
BoundReport case_bound_report(const ClassCatalog& catalog);

class BoundViolation : public InvariantViolation {
 public:
  BoundViolation(const std::string& what, BoundReport report)
      : InvariantViolation(what), report_(std::move(report)) {}
  const BoundReport& report() const noexcept { return report_; }

 private:
  BoundReport report_;
};

/// Builds the report and throws BoundViolation naming the first witness if
/// any row is violated.
BoundReport verify_bounds(const ClassCatalog& catalog);

}  // namespace hirz
