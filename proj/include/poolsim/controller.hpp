#pragma once

#include "poolsim/occupancy.hpp"
#include "poolsim/policy.hpp"

namespace poolsim {

// Indicator of the raise condition: at least n-1 pools hold h or more tasks
// right before the arrival.
bool increase_indicator(const OccupancyMeasure& pre_arrival, int h);

// Indicator of the lower condition: the fraction of pools with at least ell
// tasks is <= alpha_n right before the arrival.
bool decrease_indicator(const OccupancyMeasure& pre_arrival, int ell, const AlphaRule& alpha);

/// Signed threshold adjustment decided at an arrival epoch from the state
/// right before the arrival: delta * (increase - decrease). The caller
/// applies it to ell once the new task has been dispatched. The result never
/// drives ell negative because the decrease condition cannot fire at ell = 0
/// (q(0) = 1 > alpha_n).
int threshold_step(const OccupancyMeasure& pre_arrival, const PolicyState& policy);

// Invariant probe for the ell = 0 floor: evaluates the decrease indicator at
// a zero threshold and reports whether it is blocked (it always is for a
// valid alpha). Throws if policy.ell != 0 or alpha_n is outside (0, 1).
bool zero_threshold_decrease_blocked(const OccupancyMeasure& pre_arrival,
                                     const PolicyState& policy);

}  // namespace poolsim
