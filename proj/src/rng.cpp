#include "poolsim/rng.hpp"

#include <cmath>

namespace poolsim {
namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
    : state_(mix(mix(master_seed + kGamma) ^ mix(stream_id * kGamma + 1))) {}

std::uint64_t RngStream::next_u64() noexcept {
    state_ += kGamma;
    return mix(state_);
}

double RngStream::next_unit() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_exponential() noexcept {
    // -log(1-u) with u in [0,1); log1p keeps small u exact and u -> 1 finite.
    return -std::log1p(-next_unit());
}

}  // namespace poolsim
