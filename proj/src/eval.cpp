#include "exh/eval.hpp"

#include <algorithm>
#include <string>

#include "exh/error.hpp"

namespace exh {

namespace {

void require_dim(std::size_t have, std::size_t want, const char* what) {
  if (have != want)
    throw DimensionMismatch(std::string(what) + ": direction of length " +
                            std::to_string(have) + ", expected " + std::to_string(want));
}

}  // namespace

double support(const Polytope& c, std::span<const double> dir, Extreme which) {
  require_dim(dir.size(), c.dim(), "support");
  return kernels::active().extreme(c.soa(), c.size(), dir, which);
}

double support_max(const Polytope& c, std::span<const double> dir) {
  return support(c, dir, Extreme::Max);
}

double support_min(const Polytope& c, std::span<const double> dir) {
  return support(c, dir, Extreme::Min);
}

Vector lifted_direction(Kind kind, std::span<const double> delta) {
  if (!is_coexhauster(kind)) return Vector(delta.begin(), delta.end());
  Vector g(delta.size() + 1);
  g[0] = 1.0;
  std::copy(delta.begin(), delta.end(), g.begin() + 1);
  return g;
}

double affine_support(const Polytope& c, std::span<const double> delta, Extreme which) {
  require_dim(delta.size() + 1, c.dim(), "affine_support");
  const Vector g = lifted_direction(Kind::UpperCoexhauster, delta);
  return kernels::active().extreme(c.soa(), c.size(), g, which);
}

double eval(const Family& f, std::span<const double> delta) {
  require_dim(delta.size(), f.space_dim(), "eval");
  const Vector g = lifted_direction(f.kind(), delta);
  // Upper kinds: min over sets of the set-wise max. Lower kinds: the reverse.
  const bool upper = is_upper(f.kind());
  const Extreme inner = upper ? Extreme::Max : Extreme::Min;
  const auto& k = kernels::active();
  double best = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Polytope& c = f[i];
    const double v = k.extreme(c.soa(), c.size(), g, inner);
    if (i == 0 || (upper ? v < best : v > best)) best = v;
  }
  return best;
}

}  // namespace exh
