#pragma once

#include <cstdint>

namespace poolsim {

/// Counter-based splitmix64 stream keyed by (master seed, stream id).
/// Output k is a fixed bijective mix of key + k*gamma, so streams are
/// reproducible and independent streams never share state.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_id);

    std::uint64_t next_u64() noexcept;
    double next_unit() noexcept;         // uniform on [0, 1), 53-bit resolution
    double next_exponential() noexcept;  // Exp(1) by inversion

    static const char* generator_name() noexcept { return "splitmix64"; }

private:
    std::uint64_t state_;
};

// Stream-id layout shared by the engines. Skeleton ids are the raw process
// ids (0 = arrivals, i >= 1 = departures at level i); auxiliary streams live
// far above any occupancy level.
namespace stream_id {
inline constexpr std::uint64_t arrival_skeleton = 0;
inline constexpr std::uint64_t selection = std::uint64_t{1} << 32;
inline constexpr std::uint64_t thinning_candidates = selection + 1;
inline constexpr std::uint64_t thinning_accept = selection + 2;
inline constexpr std::uint64_t thinning_departure_time = selection + 3;
inline constexpr std::uint64_t thinning_departure_pick = selection + 4;
inline constexpr std::uint64_t fslln_skeleton = selection + 5;
}  // namespace stream_id

}  // namespace poolsim
