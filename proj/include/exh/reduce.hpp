#pragma once

#include "exh/family.hpp"
#include "exh/sampler.hpp"

namespace exh {

/// Merges sets with equal canonical vertex lists (within tol), keeping the
/// first occurrence in place. Exact: the represented function is unchanged.
Family dedup_sets(const Family& f, double tol = kVertexTol);

/// Greedy sampled pruning. Candidates are visited largest vertex count first
/// (ties by position); a candidate is dropped when, at every sampled direction
/// and at the canonical probes, the family without it still evaluates within
/// `tol` of the original family. Never removes the last set.
///
/// Only certified on the sample: re-check the result with check_equivalence.
Family prune_sampled(const Family& f, const DirectionSampler& sampler, double tol = kEqTol);

}  // namespace exh
