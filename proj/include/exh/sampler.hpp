#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "exh/polytope.hpp"

namespace exh {

enum class SamplerMode {
  /// Uniform on the unit sphere S^{dim-1}.
  FullSphere,
  /// Uniform on the half sphere with first coordinate >= 0.
  HalfSphereFirstCoordNonneg,
  /// dim == 2 only: (cos t, sin t) at t = 2*pi*s/count, seed ignored.
  UniformAngles2D,
};

/// Deterministic generator of directions: the same (dim, count, seed, mode,
/// radius) always yields the same vectors, bit for bit, on any platform.
/// Emitted vectors have Euclidean norm `radius` (1 by default) within kNormTol.
struct DirectionSampler {
  std::size_t dim = 1;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  SamplerMode mode = SamplerMode::FullSphere;
  double radius = 1.0;

  /// Throws InvalidInput for dim == 0, non-positive radius, or
  /// UniformAngles2D with dim != 2.
  std::vector<Vector> directions() const;
};

/// Seeded source of doubles used by the samplers and generators. Built on
/// std::mt19937_64 raw output so streams do not depend on the standard
/// library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  /// Uniform on [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  std::uint64_t integer(std::uint64_t lo, std::uint64_t hi);
  /// Standard normal (Box-Muller, one value per call).
  double normal();

 private:
  std::mt19937_64 engine_;
};

}  // namespace exh
