#pragma once

#include <span>

#include "exh/family.hpp"
#include "exh/kernels.hpp"

namespace exh {

/// max over the vertices of C of <v, dir>. Throws DimensionMismatch.
double support_max(const Polytope& c, std::span<const double> dir);
/// min over the vertices of C of <w, dir>. Throws DimensionMismatch.
double support_min(const Polytope& c, std::span<const double> dir);
double support(const Polytope& c, std::span<const double> dir, Extreme which);

/// max or min over [a,v] in C of a + <v, delta>, with C.dim() == delta.size() + 1.
double affine_support(const Polytope& c, std::span<const double> delta, Extreme which);

/// Value of the represented function at delta (length space_dim).
double eval(const Family& f, std::span<const double> delta);

/// The vector whose inner product with each member point gives that point's
/// contribution at delta: delta itself for exhausters, (1, delta) for
/// coexhausters.
Vector lifted_direction(Kind kind, std::span<const double> delta);

}  // namespace exh
