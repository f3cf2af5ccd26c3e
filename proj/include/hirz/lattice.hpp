#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <tuple>
#include <string>
#include <vector>

#include "hirz/rational.hpp"

// Numerical Neron-Severi lattice of F_e (or a decomposable ruled surface)
// blown up at r points, optionally at one more point x.
//
// Basis: C_e, f_e, E_1..E_r, E_x with C_e^2 = -e, C_e.f_e = 1, f_e^2 = 0,
// E_i^2 = -1 and the exceptional classes orthogonal to everything else.
// On a ruled surface over a genus-g curve Pic(base) is collapsed to its
// degree, so the same form applies.
namespace hirz {

enum class SurfaceKind { Hirzebruch, Ruled };

struct SurfaceContext {
  SurfaceKind kind = SurfaceKind::Hirzebruch;
  std::int64_t e = 0;
  std::int64_t g = 0;
  std::size_t r = 0;
  bool has_extra_point = false;
  /// Caller-declared hypothesis: the points (and x) are very general.
  /// For ruled surfaces it declares the position conditions the ruled
  /// theorems need (distinct fibers, off C_e).
  bool very_general = true;

  static SurfaceContext hirzebruch(std::int64_t e, std::size_t r, bool extra_point = false,
                                   bool very_general = true);
  static SurfaceContext ruled(std::int64_t g, std::int64_t e, std::size_t r,
                              bool extra_point = false, bool very_general = true);

  /// Same surface, blown up once more at x.
  SurfaceContext with_extra_point() const;
  SurfaceContext without_extra_point() const;
  std::size_t dimension() const { return 2 + r + (has_extra_point ? 1 : 0); }
  /// Throws StructuralError when the fields are inconsistent.
  void validate() const;

  friend bool operator==(const SurfaceContext&, const SurfaceContext&) = default;
};

/// Class a*C_e + b*f_e - sum m_i E_i - m_x E_x. Multiplicities carry the
/// minus sign implicitly, so E_i itself has m_i = -1.
struct DivisorClass {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::vector<std::int64_t> m;
  std::optional<std::int64_t> m_x;

  static DivisorClass zero(const SurfaceContext& ctx);
  static DivisorClass section(const SurfaceContext& ctx);  // C_e
  static DivisorClass fiber(const SurfaceContext& ctx);    // f_e
  static DivisorClass exceptional(const SurfaceContext& ctx, std::size_t i);
  static DivisorClass exceptional_x(const SurfaceContext& ctx);

  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator-=(const DivisorClass& o);
  friend DivisorClass operator+(DivisorClass x, const DivisorClass& y) { return x += y; }
  friend DivisorClass operator-(DivisorClass x, const DivisorClass& y) { return x -= y; }
  DivisorClass scaled(std::int64_t k) const;

  /// The class with its E_x part dropped (pullback coordinates on X_P).
  DivisorClass stripped() const;
  /// Same coordinates with m_x = value appended/replaced.
  DivisorClass with_m_x(std::int64_t value) const;

  /// e.g. "2C + 2f - E1 - E2 - Ex".
  std::string to_string() const;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend auto operator<=>(const DivisorClass& x, const DivisorClass& y) {
    return std::tie(x.a, x.b, x.m, x.m_x) <=> std::tie(y.a, y.b, y.m, y.m_x);
  }
};

/// Throws StructuralError unless D has the coordinate shape of ctx.
void check_dimensions(const SurfaceContext& ctx, const DivisorClass& d);

std::int64_t intersect(const SurfaceContext& ctx, const DivisorClass& d1,
                       const DivisorClass& d2);

inline std::int64_t self_intersection(const SurfaceContext& ctx, const DivisorClass& d) {
  return intersect(ctx, d, d);
}

/// Numerical canonical class. Ruled: deg(K_base + L) = 2g - 2 - e.
DivisorClass canonical_class(const SurfaceContext& ctx);

/// 1 + (C.C + C.K) / 2.
Rational arithmetic_genus(const SurfaceContext& ctx, const DivisorClass& c);

struct TransformedClass {
  SurfaceContext context;
  DivisorClass divisor;
};

/// Elementary transformation at point `i` (zero-based): blow up p_i, contract
/// the strict transform of its fiber. Sends F_e with r points to F_{e-1}
/// with r-1 points and aC + bf - sum m E to aC + (b-a)f - sum_{j != i} m_j E_j.
/// Requires m_i == a, and p_i off C_e (so the strict transform of C_e through
/// p_i is rejected).
TransformedClass elementary_transform(const SurfaceContext& ctx, const DivisorClass& c,
                                      std::size_t i);

}  // namespace hirz
