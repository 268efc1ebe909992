#pragma once

#include <utility>
#include <vector>

namespace poolsim {

/// One piece of a piecewise arrival-rate function on [t0, t1).
/// constant:  rate = base
/// linear:    rate = base + slope * (t - t0)
/// sinusoid:  rate = base + amplitude * sin(omega * t + phase)   (absolute t)
struct RateSegment {
    enum class Kind { constant, linear, sinusoid };

    Kind kind = Kind::constant;
    double t0 = 0.0;
    double t1 = 0.0;
    double base = 0.0;
    double slope = 0.0;
    double amplitude = 0.0;
    double omega = 0.0;
    double phase = 0.0;

    static RateSegment constant(double t0, double t1, double rate);
    static RateSegment linear(double t0, double t1, double rate0, double rate1);
    static RateSegment sinusoid(double t0, double t1, double base, double amplitude,
                                double omega, double phase = 0.0);

    double value(double t) const;
    double integral(double ta, double tb) const;             // exact closed form
    std::pair<double, double> min_max(double ta, double tb) const;  // exact extrema

    bool operator==(const RateSegment&) const = default;
};

/// Piecewise arrival-rate function lambda(t) on [0, T] with exact cumulative
/// integral and, for constant/linear pieces, a closed-form inverse of it.
class ArrivalRateFn {
public:
    ArrivalRateFn() = default;
    explicit ArrivalRateFn(std::vector<RateSegment> segments);

    double horizon() const noexcept;  // T

    double value(double t) const;
    double cumulative(double t) const;  // Lambda(t) = integral of lambda over [0, t]

    // Smallest t in [0, T] with Lambda(t) >= target; +infinity when the target
    // exceeds Lambda(T). Throws for sinusoid pieces (no closed-form inverse).
    double invert_cumulative(double target) const;

    double lambda_max() const;                                // exact sup over [0, T]
    std::pair<double, double> min_max(double a, double b) const;

    bool coupled_compatible() const noexcept;  // no sinusoid segments

    const std::vector<RateSegment>& segments() const noexcept { return segments_; }

    bool operator==(const ArrivalRateFn&) const = default;

private:
    std::size_t segment_index(double t) const;

    std::vector<RateSegment> segments_;
    std::vector<double> knot_cum_;  // Lambda at each segment start, plus Lambda(T)
};

}  // namespace poolsim
