#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "exh/family.hpp"
#include "exh/sampler.hpp"

namespace exh {

struct EquivalenceReport {
  double max_abs_deviation = 0.0;
  /// First tested direction attaining max_abs_deviation.
  Vector worst_direction;
  std::size_t directions_tested = 0;
  double tolerance = kEqTol;
  bool passed = true;
};

/// 0, +e_i, -e_i for every axis, and the all-ones vector, in that order.
std::vector<Vector> canonical_probes(std::size_t space_dim);

/// Compares two families as functions on R^space_dim at the canonical probes
/// followed by every sampled direction. Kinds may differ. The sampler's dim
/// must equal the common space_dim; throws DimensionMismatch otherwise.
EquivalenceReport check_equivalence(const Family& a, const Family& b,
                                    const DirectionSampler& sampler, double tol = kEqTol);

/// Seeded random family: k sets of 1..max_vertices points with coordinates
/// uniform in [-1, 1], of dimension n (exhausters) or n + 1 (coexhausters).
/// Throws InvalidInput when n, k or max_vertices is zero.
Family random_family(std::size_t n, std::size_t k, std::size_t max_vertices, Kind kind,
                     std::uint64_t seed);

}  // namespace exh
