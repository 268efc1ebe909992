#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "poolsim/arrival_rate.hpp"
#include "poolsim/occupancy.hpp"

namespace poolsim::test {

inline OccupancyMeasure make_state(std::int64_t n, std::initializer_list<std::int64_t> levels) {
    const std::vector<std::int64_t> v(levels);
    return OccupancyMeasure(n, v);
}

inline double mean(const std::vector<double>& xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

inline double median(std::vector<double> xs) {
    if (xs.empty()) throw std::invalid_argument("median of empty sample");
    std::sort(xs.begin(), xs.end());
    const std::size_t k = xs.size() / 2;
    return xs.size() % 2 == 1 ? xs[k] : 0.5 * (xs[k - 1] + xs[k]);
}

inline double stddev(const std::vector<double>& xs) {
    const double m = mean(xs);
    double s = 0.0;
    for (double x : xs) s += (x - m) * (x - m);
    return std::sqrt(s / static_cast<double>(xs.size() - 1));
}

// Independent quadrature oracle for the fluid integral equation:
// integral over [a, b] of lambda(s) e^{-mu (t_end - s)} ds, by 5-point
// Gauss-Legendre on subintervals split at the segment knots.
inline double weighted_rate_integral(const ArrivalRateFn& lambda, double a, double b,
                                     double mu, double t_end) {
    static const double nodes[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                    0.5384693101056831, 0.9061798459386640};
    static const double weights[5] = {0.2369268850561891, 0.4786286704993665,
                                      0.5688888888888889, 0.4786286704993665,
                                      0.2369268850561891};
    std::vector<double> cuts{a};
    for (const RateSegment& s : lambda.segments()) {
        if (s.t0 > a && s.t0 < b) cuts.push_back(s.t0);
        if (s.t1 > a && s.t1 < b) cuts.push_back(s.t1);
    }
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const double lo = cuts[k], hi = cuts[k + 1];
        const double half = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);
        double piece = 0.0;
        for (int q = 0; q < 5; ++q) {
            const double s = mid + half * nodes[q];
            piece += weights[q] * lambda.value(s) * std::exp(-mu * (t_end - s));
        }
        total += half * piece;
    }
    return total;
}

}  // namespace poolsim::test
