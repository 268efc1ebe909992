#pragma once

#include <cstdint>
#include <vector>

#include "poolsim/arrival_rate.hpp"
#include "poolsim/occupancy.hpp"
#include "poolsim/policy.hpp"

namespace poolsim {

enum class EngineMode { thinning, coupled, oracle };

const char* to_string(EngineMode mode) noexcept;

/// Full description of one simulation run.
struct Scenario {
    std::int64_t n = 1;
    double mu = 1.0;
    int delta = 1;
    AlphaRule alpha{AlphaRule::Kind::value, 0.9};
    ArrivalRateFn lambda;
    double horizon = 0.0;                    // T; must match lambda's domain
    std::vector<std::int64_t> init_levels;   // count(i) for i = 1..; empty = empty system
    int ell0 = 0;
    std::uint64_t seed = 0;
    EngineMode mode = EngineMode::thinning;
    double grid = 0.01;                      // sample step for emitted series

    OccupancyMeasure initial_occupancy() const;
    PolicyState initial_policy() const;

    void validate() const;

    bool operator==(const Scenario&) const = default;
};

}  // namespace poolsim
