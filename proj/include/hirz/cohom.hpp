#pragma once

#include <cstdint>
#include <vector>

#include "hirz/lattice.hpp"
#include "hirz/rational.hpp"

namespace hirz {

/// Degrees of the line bundles in the splitting of pi_*(a C_e) on P^1:
/// [0, -e, -2e, ..., -ae].
std::vector<std::int64_t> pushforward_degrees(std::int64_t a, std::int64_t e);

/// h^0(F_e, aC_e + bf_e) = sum_{i=0}^{a} h^0(P^1, O(b - ie)).
/// Zero for a < 0. Equals (a+1)(b+1) - a(a+1)e/2 whenever b >= ae.
std::int64_t h0_fe(std::int64_t e, std::int64_t a, std::int64_t b);

/// Riemann-Roch lower bound (C.C - K.C)/2 + 1 for h^0 on the blowup.
Rational riemann_roch_lower_bound(const SurfaceContext& ctx, const DivisorClass& c);

}  // namespace hirz
