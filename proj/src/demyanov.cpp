#include "exh/demyanov.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "exh/error.hpp"
#include "exh/kernels.hpp"
#include "exh/reduce.hpp"

namespace exh {

SamplerMode default_demyanov_mode(const Family& f) {
  if (is_coexhauster(f.kind())) return SamplerMode::HalfSphereFirstCoordNonneg;
  return f.space_dim() == 2 ? SamplerMode::UniformAngles2D : SamplerMode::FullSphere;
}

std::vector<ActiveHull> active_hulls(const Family& f, const DirectionSampler& sampler,
                                     double active_tol) {
  const std::size_t want = set_dim(f.kind(), f.space_dim());
  if (sampler.dim != want)
    throw DimensionMismatch("demyanov: sampler dimension " + std::to_string(sampler.dim) +
                            ", family needs " + std::to_string(want));
  if (is_coexhauster(f.kind()) && sampler.mode != SamplerMode::HalfSphereFirstCoordNonneg)
    throw InvalidInput("demyanov: coexhausters need half-sphere directions (g_1 >= 0)");
  if (!is_coexhauster(f.kind()) && sampler.mode == SamplerMode::HalfSphereFirstCoordNonneg)
    throw InvalidInput("demyanov: exhausters need directions from the full sphere");

  // Lower inputs collect minimizers, upper inputs maximizers.
  const Extreme pick = is_upper(f.kind()) ? Extreme::Max : Extreme::Min;
  const auto& k = kernels::active();

  std::vector<ActiveHull> out;
  const std::vector<Vector> dirs = sampler.directions();
  out.reserve(dirs.size());
  std::vector<double> values;
  for (const Vector& g : dirs) {
    std::vector<Vector> active;
    for (const Polytope& c : f.sets()) {
      values.resize(c.size());
      k.project(c.soa(), c.size(), g, values);
      const double target = pick == Extreme::Max
                                ? *std::max_element(values.begin(), values.end())
                                : *std::min_element(values.begin(), values.end());
      for (std::size_t j = 0; j < c.size(); ++j)
        if (std::abs(values[j] - target) <= active_tol) active.push_back(c.vertex(j));
    }
    out.push_back({g, Polytope(active)});
  }
  return out;
}

Family demyanov_convert(const Family& f, const DirectionSampler& sampler, double active_tol) {
  std::vector<ActiveHull> hulls = active_hulls(f, sampler, active_tol);
  if (hulls.empty()) throw InvalidInput("demyanov: sampler produced no directions");
  std::vector<Polytope> sets;
  sets.reserve(hulls.size());
  for (ActiveHull& h : hulls) sets.push_back(std::move(h.hull));
  return dedup_sets(Family(dual(f.kind()), f.space_dim(), std::move(sets)));
}

}  // namespace exh
