#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "finsler/norm.hpp"

namespace finsler {

/// Directions below this |F²| are treated as near the light cone and skipped.
inline constexpr double kLightConeRejection = 1e-6;

/// `count` directions drawn uniformly from the unit sphere, rejecting those
/// with |F²| < min_abs_f2 or outside the norm's domain. Deterministic in seed.
std::vector<Vector> sample_admissible_directions(const NormModel& model, std::size_t count,
                                                 std::uint64_t seed,
                                                 double min_abs_f2 = kLightConeRejection);

/// Uniform point on the unit sphere of R^n.
Vector random_unit_vector(int n, std::mt19937_64& rng);

/// Random basis with entries in [-1, 1], redrawn until well conditioned.
std::vector<Vector> random_basis(int n, std::mt19937_64& rng, double min_abs_det = 1e-2);

}  // namespace finsler
