#pragma once

#include "poolsim/scenario.hpp"
#include "poolsim/skeleton.hpp"
#include "poolsim/trajectory.hpp"

namespace poolsim {

/// Runs the scenario in the mode it requests.
Trajectory run(const Scenario& scenario);

/// Exact event-driven simulation by thinning a dominating Poisson stream of
/// rate n*lambda_max. Supports every rate-segment type; randomness is not
/// shared across system sizes.
Trajectory run_thinning(const Scenario& scenario);

/// Sample-path construction from unit-rate driving skeletons and selection
/// variables: arrivals are jump times of skeleton 0 under the time change
/// n*Lambda(t), departures at level i consume skeleton i under its
/// compensator. Reusing the same SkeletonSet across runs makes different n
/// consume the same randomness. Requires an invertible cumulative rate.
Trajectory run_coupled(const Scenario& scenario);
Trajectory run_coupled(const Scenario& scenario, SkeletonSet& skeletons);

/// Ground-truth per-pool simulator (n <= 64): pools are individual task
/// counts and dispatching literally enumerates eligible pools, ordered by
/// (task count, pool id), indexing with the selection variable. Uses the same
/// driving primitives as run_coupled, so their sample paths must coincide.
Trajectory run_oracle(const Scenario& scenario);
Trajectory run_oracle(const Scenario& scenario, SkeletonSet& skeletons);

}  // namespace poolsim
