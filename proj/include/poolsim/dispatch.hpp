#pragma once

#include "poolsim/occupancy.hpp"
#include "poolsim/policy.hpp"

namespace poolsim {

enum class Band { low, mid, high };

const char* to_string(Band band) noexcept;

struct DispatchDecision {
    int target_level = 1;  // task goes to a pool with exactly target_level - 1 tasks
    Band band = Band::low;

    bool operator==(const DispatchDecision&) const = default;
};

/// Half-open interval [lo, hi) of the unit partitions used by the dispatcher.
struct UnitInterval {
    double lo = 0.0;
    double hi = 0.0;

    bool empty() const noexcept { return !(lo < hi); }
    bool contains(double u) const noexcept { return lo <= u && u < hi; }
};

// [1 - q(i-1), 1 - q(i)); over i >= 1 these tile [0, 1) and the length of
// cell i is the fraction of pools with exactly i-1 tasks.
UnitInterval partition_cell(const OccupancyMeasure& state, int i);

// [(1 - q(i-1))/(1 - q(j)), (1 - q(i))/(1 - q(j))) for 1 <= i <= j: the
// conditional fraction among pools with at most j-1 tasks. Empty when
// q(j) = 1.
UnitInterval conditional_cell(const OccupancyMeasure& state, int i, int j);

/// Target level for one arrival, given the pre-arrival state, the threshold
/// policy and the arrival's selection variable u in [0, 1).
///
/// Prefers pools below ell, then pools below h = ell + delta, then any pool.
/// Boundary handling works on integer pool counts scaled by the eligible-set
/// size, so cell edges are mapped exactly.
DispatchDecision dispatch(const OccupancyMeasure& state, const PolicyState& policy, double u);

}  // namespace poolsim
