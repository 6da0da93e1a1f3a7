#pragma once

#include <vector>

#include "exh/family.hpp"
#include "exh/sampler.hpp"

namespace exh {

/// One output set of the direction-based converter together with the
/// direction that generated it.
struct ActiveHull {
  Vector direction;
  Polytope hull;
};

/// For every sampled direction g, collects from each member set the vertices
/// whose inner product with g is within `active_tol` of that set's minimum
/// (lower inputs) or maximum (upper inputs), and returns their hull.
///
/// Exhausters take directions in R^n (FullSphere, or UniformAngles2D when
/// n == 2); coexhausters take directions in R^{n+1} from the half sphere
/// g_1 >= 0. Throws DimensionMismatch / InvalidInput on a sampler that does not
/// fit the family.
std::vector<ActiveHull> active_hulls(const Family& f, const DirectionSampler& sampler,
                                     double active_tol = kActiveTol);

/// Direction-sampled classical converter: the family of active hulls, with
/// duplicate sets merged, as a family of the dual kind. Exact at the sampled
/// directions; elsewhere an approximation that improves as sampling densifies.
Family demyanov_convert(const Family& f, const DirectionSampler& sampler,
                        double active_tol = kActiveTol);

/// Sampler mode that demyanov_convert accepts for `f` by default: half sphere
/// for coexhausters, uniform angles for planar exhausters, full sphere else.
SamplerMode default_demyanov_mode(const Family& f);

}  // namespace exh
