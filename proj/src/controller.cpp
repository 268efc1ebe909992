#include "poolsim/controller.hpp"

#include <stdexcept>

namespace poolsim {

bool increase_indicator(const OccupancyMeasure& pre_arrival, int h) {
    return pre_arrival.count(h) >= pre_arrival.n() - 1;
}

bool decrease_indicator(const OccupancyMeasure& pre_arrival, int ell,
                        const AlphaRule& alpha) {
    return alpha.decrease_triggered(pre_arrival.count(ell), pre_arrival.n());
}

int threshold_step(const OccupancyMeasure& pre_arrival, const PolicyState& policy) {
    const int up = increase_indicator(pre_arrival, policy.h()) ? 1 : 0;
    const int down = decrease_indicator(pre_arrival, policy.ell, policy.alpha) ? 1 : 0;
    return policy.delta * (up - down);
}

bool zero_threshold_decrease_blocked(const OccupancyMeasure& pre_arrival,
                                     const PolicyState& policy) {
    if (policy.ell != 0)
        throw std::invalid_argument("zero-threshold probe requires ell = 0");
    policy.alpha.value(pre_arrival.n());  // rejects alpha outside (0, 1)
    return !decrease_indicator(pre_arrival, 0, policy.alpha);
}

}  // namespace poolsim
