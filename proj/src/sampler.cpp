#include "exh/sampler.hpp"

#include <cmath>
#include <numbers>

#include "exh/error.hpp"

namespace exh {

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

double Rng::uniform() {
  // Top 53 bits -> [0, 1).
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::integer(std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo + 1;
  if (span == 0) return lo + engine_();
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return lo + x % span;
}

double Rng::normal() {
  double u1;
  do u1 = uniform();
  while (u1 == 0.0);
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<Vector> DirectionSampler::directions() const {
  if (dim == 0) throw InvalidInput("sampler dimension must be positive");
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw InvalidInput("sampler radius must be positive and finite");

  std::vector<Vector> out;
  out.reserve(count);

  if (mode == SamplerMode::UniformAngles2D) {
    if (dim != 2) throw InvalidInput("UniformAngles2D sampler requires dim == 2");
    for (std::size_t s = 0; s < count; ++s) {
      const double t = 2.0 * std::numbers::pi * static_cast<double>(s) / static_cast<double>(count);
      out.push_back({radius * std::cos(t), radius * std::sin(t)});
    }
    return out;
  }

  Rng rng(seed);
  Vector v(dim);
  while (out.size() < count) {
    double norm2 = 0.0;
    for (double& x : v) {
      x = rng.normal();
      norm2 += x * x;
    }
    const double norm = std::sqrt(norm2);
    if (norm < 1e-8) continue;
    const double scale = radius / norm;
    for (double& x : v) x *= scale;
    if (mode == SamplerMode::HalfSphereFirstCoordNonneg && v[0] < 0.0)
      for (double& x : v) x = -x;
    out.push_back(v);
  }
  return out;
}

}  // namespace exh
