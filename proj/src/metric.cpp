#include "poolsim/metric.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace poolsim {

double seq_metric(std::span<const double> x, std::span<const double> y) {
    // After summing index i the remaining tail is bounded by 2^-i; 41 terms
    // push that below 1e-12.
    constexpr std::size_t kMaxTerms = 41;
    const std::size_t len = std::min(kMaxTerms, std::max(x.size(), y.size()));
    double sum = 0.0;
    double weight = 1.0;
    for (std::size_t i = 0; i < len; ++i, weight *= 0.5) {
        const double xi = i < x.size() ? x[i] : 0.0;
        const double yi = i < y.size() ? y[i] : 0.0;
        sum += std::min(std::fabs(xi - yi), 1.0) * weight;
    }
    return sum;
}

}  // namespace poolsim
