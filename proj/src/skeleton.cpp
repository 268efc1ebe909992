#include "poolsim/skeleton.hpp"

#include <stdexcept>

namespace poolsim {

DrivingSkeleton::DrivingSkeleton(std::uint64_t master_seed, std::uint64_t id)
    : rng_(master_seed, id), id_(id) {}

double DrivingSkeleton::jump(std::size_t k) {
    while (jumps_.size() <= k) {
        const double prev = jumps_.empty() ? 0.0 : jumps_.back();
        jumps_.push_back(prev + rng_.next_exponential());
    }
    return jumps_[k];
}

SkeletonSet::SkeletonSet(std::uint64_t master_seed) : seed_(master_seed) {}

DrivingSkeleton& SkeletonSet::departures(int level) {
    if (level < 1) throw std::invalid_argument("departure skeleton level must be >= 1");
    return process(static_cast<std::size_t>(level));
}

DrivingSkeleton& SkeletonSet::process(std::size_t id) {
    while (processes_.size() <= id)
        processes_.emplace_back(seed_, static_cast<std::uint64_t>(processes_.size()));
    return processes_[id];
}

SelectionStream::SelectionStream(std::uint64_t master_seed)
    : rng_(master_seed, stream_id::selection) {}

double SelectionStream::next() noexcept {
    ++consumed_;
    return rng_.next_unit();
}

}  // namespace poolsim
