#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hirz/curves.hpp"
#include "hirz/lattice.hpp"
#include "hirz/rational.hpp"

namespace hirz {

/// L = alpha C_e + beta f_e - sum mu_i E_i on X_P.
struct PolarizationL {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  std::vector<std::int64_t> mu;
  /// Caller's assertion that L is ample. Ampleness is never decided here.
  bool ample_asserted = true;

  DivisorClass as_class() const;
  PolarizationL scaled(std::int64_t k) const;
};

struct SeshadriResult {
  Rational epsilon;
  /// All minimizing classes, in canonical order.
  std::vector<DivisorClass> argmin_classes;
  /// First winning term; `tied_branches` lists every winning term.
  std::string branch;
  std::vector<std::string> tied_branches;
  /// Results hold only if L really is ample.
  bool conditional_on_ampleness = true;
};

/// Where x sits on a blown-up ruled surface.
enum class RuledCase {
  Generic = 1,           // off C_e, every F_i and every E_i
  OnFiber = 2,           // on F_i only
  OnExceptional = 3,     // on E_i only
  OnSection = 4,         // on C_e only
  SectionAndFiber = 5,   // on C_e and F_i
  FiberAndExceptional = 6,  // on F_i and E_i
};

struct RuledPosition {
  RuledCase kind = RuledCase::Generic;
  std::optional<std::size_t> i;  // zero-based point index, for cases 2, 3, 5, 6

  bool needs_index() const;
};

// Candidate curves through x on the blowup at x (all with m_x >= 1).

/// Delta for r = e+2 on F_e.
ClassCatalog delta_set_r_e2(std::int64_t e);
/// Lambda (a superset of Delta by effective classes) for r = e+3 on F_e.
ClassCatalog lambda_set_r_e3(std::int64_t e);
/// Delta for one position case on a blown-up ruled surface.
ClassCatalog ruled_delta(const SurfaceContext& ctx, const RuledPosition& pos);

/// A(L) via sorting: weight a on the e-2a+3 largest mu, a-1 on the rest,
/// minimized over 2 <= a <= (e+3)/2. nullopt stands for +infinity.
std::optional<Rational> a_of_l(std::int64_t e, const PolarizationL& l);
/// B(L): weights a on the e-2a+2 largest mu, denominator a.
std::optional<Rational> b_of_l(std::int64_t e, const PolarizationL& l);
/// Same quantities by minimizing over every index partition.
std::optional<Rational> a_of_l_partitions(std::int64_t e, const PolarizationL& l);
std::optional<Rational> b_of_l_partitions(std::int64_t e, const PolarizationL& l);

/// Necessary conditions for ampleness on F_e blown up at r <= e+4 points:
/// L^2 > 0, L.C_e > 0, L.f > 0 and L positive on every listed (-1)-class;
/// for r in {e+2, e+3} also L.C > 0 for each Delta/Lambda class with E_x
/// stripped. All these classes are effective. Passing does not prove
/// ampleness.
bool passes_ampleness_screen(const SurfaceContext& ctx, const PolarizationL& l);
/// For ruled surfaces: L^2 > 0, L.C_e > 0, 0 < mu_i < alpha.
bool passes_ruled_screen(const SurfaceContext& ctx, const PolarizationL& l);

/// Closed form for r = e+2 at a very general point.
SeshadriResult epsilon_r_e2(const SurfaceContext& ctx, const PolarizationL& l);
/// Closed form for r = e+3 at a very general point.
SeshadriResult epsilon_r_e3(const SurfaceContext& ctx, const PolarizationL& l);
/// min over catalog classes C with m_x > 0 of (L . C_stripped) / m_x.
SeshadriResult generic_epsilon(const PolarizationL& l, const ClassCatalog& catalog);
/// Closed form for the six position cases on a blown-up ruled surface.
SeshadriResult epsilon_ruled(const SurfaceContext& ctx, const PolarizationL& l,
                             const RuledPosition& pos);

/// Restricted nefness test: D^2 >= 0, D.H > 0, D.C >= 0 for C in catalog.
/// Conclusive only if the catalog lists every curve the criterion needs.
bool nef_check(const SurfaceContext& ctx, const DivisorClass& d, const ClassCatalog& catalog,
               const DivisorClass& h);

/// den(eps) * L - num(eps) * E_x: a positive multiple of pi^*L - eps E_x
/// with integer coordinates.
DivisorClass scaled_lift(const PolarizationL& l, const Rational& eps);

/// eps^2 <= L^2, compared exactly.
bool sqrt_bound_holds(const SurfaceContext& ctx, const PolarizationL& l, const Rational& eps);

}  // namespace hirz
