#include "poolsim/dispatch.hpp"

#include <cmath>
#include <stdexcept>

namespace poolsim {
namespace {

// Unique level i >= 1 with n - Q(i-1) <= x < n - Q(i), by binary search on
// the non-decreasing sequence n - Q(i). Requires 0 <= x < n - Q(beyond).
int level_for_scaled_point(const OccupancyMeasure& state, double x) {
    const std::int64_t n = state.n();
    int lo = 1;
    int hi = state.cap();  // n - Q(cap) = n > x always
    while (lo < hi) {
        const int mid = lo + (hi - lo) / 2;
        if (static_cast<double>(n - state.count(mid)) > x)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

}  // namespace

const char* to_string(Band band) noexcept {
    switch (band) {
        case Band::low: return "low";
        case Band::mid: return "mid";
        case Band::high: return "high";
    }
    return "?";
}

UnitInterval partition_cell(const OccupancyMeasure& state, int i) {
    if (i < 1) throw std::domain_error("partition cell index must be >= 1");
    return {1.0 - state.fraction(i - 1), 1.0 - state.fraction(i)};
}

UnitInterval conditional_cell(const OccupancyMeasure& state, int i, int j) {
    if (i < 1 || i > j) throw std::domain_error("conditional cell needs 1 <= i <= j");
    const std::int64_t below = state.n() - state.count(j);
    if (below == 0) return {0.0, 0.0};  // q(j) = 1: empty by convention
    const double denom = static_cast<double>(below);
    return {static_cast<double>(state.n() - state.count(i - 1)) / denom,
            static_cast<double>(state.n() - state.count(i)) / denom};
}

DispatchDecision dispatch(const OccupancyMeasure& state, const PolicyState& policy,
                          double u) {
    if (!(u >= 0.0 && u < 1.0)) throw std::domain_error("selection variable must be in [0,1)");
    const std::int64_t n = state.n();

    const std::int64_t below_ell = n - state.count(policy.ell);
    if (below_ell > 0) {
        const double x = u * static_cast<double>(below_ell);
        return {level_for_scaled_point(state, x), Band::low};
    }
    const std::int64_t below_h = n - state.count(policy.h());
    if (below_h > 0) {
        const double x = u * static_cast<double>(below_h);
        return {level_for_scaled_point(state, x), Band::mid};
    }
    const double x = u * static_cast<double>(n);
    return {level_for_scaled_point(state, x), Band::high};
}

}  // namespace poolsim
