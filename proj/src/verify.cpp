#include "exh/verify.hpp"

#include <cmath>
#include <string>

#include "exh/error.hpp"
#include "exh/eval.hpp"

namespace exh {

std::vector<Vector> canonical_probes(std::size_t space_dim) {
  std::vector<Vector> probes;
  probes.reserve(2 * space_dim + 2);
  probes.emplace_back(space_dim, 0.0);
  for (std::size_t i = 0; i < space_dim; ++i) {
    for (double sign : {1.0, -1.0}) {
      Vector e(space_dim, 0.0);
      e[i] = sign;
      probes.push_back(std::move(e));
    }
  }
  probes.emplace_back(space_dim, 1.0);
  return probes;
}

EquivalenceReport check_equivalence(const Family& a, const Family& b,
                                    const DirectionSampler& sampler, double tol) {
  if (a.space_dim() != b.space_dim())
    throw DimensionMismatch("families live on R^" + std::to_string(a.space_dim()) + " and R^" +
                            std::to_string(b.space_dim()));
  if (sampler.count > 0 && sampler.dim != a.space_dim())
    throw DimensionMismatch("sampler dimension " + std::to_string(sampler.dim) +
                            " does not match space dimension " + std::to_string(a.space_dim()));

  EquivalenceReport report;
  report.tolerance = tol;
  auto probe = [&](const Vector& d) {
    const double dev = std::abs(eval(a, d) - eval(b, d));
    if (report.directions_tested == 0 || dev > report.max_abs_deviation) {
      report.max_abs_deviation = dev;
      report.worst_direction = d;
    }
    ++report.directions_tested;
  };
  for (const Vector& d : canonical_probes(a.space_dim())) probe(d);
  if (sampler.count > 0)
    for (const Vector& d : sampler.directions()) probe(d);

  report.passed = report.max_abs_deviation <= tol;
  return report;
}

Family random_family(std::size_t n, std::size_t k, std::size_t max_vertices, Kind kind,
                     std::uint64_t seed) {
  if (n == 0 || k == 0 || max_vertices == 0)
    throw InvalidInput("random_family needs n, k and max_vertices >= 1");
  Rng rng(seed);
  const std::size_t d = set_dim(kind, n);
  std::vector<Polytope> sets;
  sets.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto m = static_cast<std::size_t>(rng.integer(1, max_vertices));
    std::vector<Vector> pts(m, Vector(d));
    for (Vector& p : pts)
      for (double& x : p) x = rng.uniform(-1.0, 1.0);
    sets.emplace_back(pts);
  }
  return Family(kind, n, std::move(sets));
}

}  // namespace exh
