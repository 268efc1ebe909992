#include "poolsim/scenario.hpp"

#include <cmath>
#include <stdexcept>

namespace poolsim {

const char* to_string(EngineMode mode) noexcept {
    switch (mode) {
        case EngineMode::thinning: return "thinning";
        case EngineMode::coupled: return "coupled";
        case EngineMode::oracle: return "oracle";
    }
    return "?";
}

OccupancyMeasure Scenario::initial_occupancy() const {
    return OccupancyMeasure(n, init_levels);
}

PolicyState Scenario::initial_policy() const {
    return PolicyState{ell0, delta, alpha};
}

void Scenario::validate() const {
    if (n < 1) throw std::invalid_argument("scenario: n must be >= 1");
    if (!(mu > 0.0) || !std::isfinite(mu))
        throw std::invalid_argument("scenario: mu must be positive and finite");
    if (!(horizon > 0.0)) throw std::invalid_argument("scenario: horizon must be positive");
    if (lambda.segments().empty())
        throw std::invalid_argument("scenario: arrival rate function missing");
    if (lambda.horizon() < horizon)
        throw std::invalid_argument("scenario: arrival rate not defined up to the horizon");
    if (!(grid > 0.0)) throw std::invalid_argument("scenario: grid step must be positive");
    initial_occupancy();          // validates level counts
    initial_policy().validate();  // validates ell0 / delta
    alpha.value(n);               // validates alpha_n in (0,1)
    if (mode == EngineMode::coupled || mode == EngineMode::oracle) {
        if (!lambda.coupled_compatible())
            throw std::runtime_error(
                "scenario: coupled/oracle mode requires an invertible cumulative rate "
                "(no sinusoid segments)");
    }
    if (mode == EngineMode::oracle && n > 64)
        throw std::invalid_argument("scenario: oracle mode limited to n <= 64");
}

}  // namespace poolsim
