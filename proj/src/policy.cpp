#include "poolsim/policy.hpp"

#include <cmath>
#include <stdexcept>

namespace poolsim {

double AlphaRule::value(std::int64_t n) const {
    double a = param;
    if (kind == Kind::exponent) {
        if (param <= 0.0) throw std::invalid_argument("alpha exponent must be positive");
        a = 1.0 - std::pow(static_cast<double>(n), -param);
    }
    if (!(a > 0.0 && a < 1.0))
        throw std::invalid_argument("alpha must lie in (0, 1)");
    return a;
}

bool AlphaRule::decrease_triggered(std::int64_t count_at_ell, std::int64_t n) const {
    if (kind == Kind::exponent) {
        value(n);  // validate
        // count <= (1 - n^{-e}) n  <=>  n - count >= n^{1-e}
        return static_cast<double>(n - count_at_ell) >=
               std::pow(static_cast<double>(n), 1.0 - param);
    }
    value(n);  // validate
    return static_cast<double>(count_at_ell) <= param * static_cast<double>(n);
}

void PolicyState::validate() const {
    if (delta < 1) throw std::invalid_argument("delta must be >= 1");
    if (ell < 0) throw std::invalid_argument("threshold must be non-negative");
    if (ell % delta != 0)
        throw std::invalid_argument("threshold must be a multiple of delta");
}

}  // namespace poolsim
