#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hirz/lattice.hpp"
#include "hirz/seshadri.hpp"

// Oracle and invariant sweeps behind `hirz verify` and the acceptance binary.
namespace hirz {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string summary;
  std::vector<std::string> details;
  double seconds = 0.0;
};

struct VerifyOptions {
  std::uint64_t seed = 20240917;
  /// Admissible polarizations per (e, r) pair in the Seshadri sweeps.
  std::size_t samples = 1000;
  /// Random L per (e, case) in the ruled sweep.
  std::size_t ruled_samples = 200;
  /// Smaller ranges, for smoke runs.
  bool quick = false;
};

constexpr int kCheckCount = 9;

/// Runs check `id` (1..9). Criteria 3, 4 and 5 share one sweep.
CheckResult run_check(int id, const VerifyOptions& opts = {});
std::vector<CheckResult> run_all_checks(const VerifyOptions& opts = {});

/// Rejection sampler for L on F_e blown up at r points: alpha, beta uniform
/// in [1, 20], then mu_max uniform in [1, 20] and each mu_i uniform in
/// [1, mu_max]. Returns nullopt when the draw fails the ampleness screen.
std::optional<PolarizationL> draw_hirzebruch_l(std::int64_t e, std::size_t r, std::mt19937_64& rng);

/// Ruled sampler: alpha in [2, 20], beta in [e alpha + 1, e alpha + 20],
/// mu_i in [1, alpha - 1]. nullopt when L^2 <= 0.
std::optional<PolarizationL> draw_ruled_l(const SurfaceContext& ctx, std::mt19937_64& rng);

}  // namespace hirz
