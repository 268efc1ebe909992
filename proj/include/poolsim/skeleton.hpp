#pragma once

#include <cstdint>
#include <deque>
#include <vector>

#include "poolsim/rng.hpp"

namespace poolsim {

/// Jump times of one unit-rate Poisson process, generated lazily as partial
/// sums of Exp(1) increments and memoized. Regenerating from the same
/// (master seed, id) yields bitwise-identical times, which is what lets
/// different system sizes consume the same randomness.
class DrivingSkeleton {
public:
    DrivingSkeleton(std::uint64_t master_seed, std::uint64_t id);

    double jump(std::size_t k);  // k-th jump time, 0-based
    std::size_t generated() const noexcept { return jumps_.size(); }
    std::uint64_t id() const noexcept { return id_; }

private:
    RngStream rng_;
    std::uint64_t id_;
    std::vector<double> jumps_;
};

/// The family of driving processes for one master seed: skeleton 0 drives
/// arrivals, skeleton i >= 1 drives departures at occupancy level i.
class SkeletonSet {
public:
    explicit SkeletonSet(std::uint64_t master_seed);

    DrivingSkeleton& arrivals() { return process(0); }
    DrivingSkeleton& departures(int level);

    std::uint64_t master_seed() const noexcept { return seed_; }

private:
    DrivingSkeleton& process(std::size_t id);

    std::uint64_t seed_;
    std::deque<DrivingSkeleton> processes_;  // deque: stable references on growth
};

/// The i.i.d. uniform selection variables U_j, consumed once per arrival in
/// arrival order.
class SelectionStream {
public:
    explicit SelectionStream(std::uint64_t master_seed);

    double next() noexcept;  // U_j in [0, 1)
    std::uint64_t consumed() const noexcept { return consumed_; }

private:
    RngStream rng_;
    std::uint64_t consumed_ = 0;
};

}  // namespace poolsim
