#pragma once

namespace exh {

/// Two vertices are the same point when every coordinate differs by at most this.
inline constexpr double kVertexTol = 1e-12;
/// Allowed deviation of a sampled direction's Euclidean norm from its target.
inline constexpr double kNormTol = 1e-12;
/// Default tolerance when comparing function values of two families.
inline constexpr double kEqTol = 1e-9;
/// A vertex is an argmin/argmax when within this of the support value.
inline constexpr double kActiveTol = 1e-9;

}  // namespace exh
