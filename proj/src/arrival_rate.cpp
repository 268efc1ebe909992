#include "poolsim/arrival_rate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace poolsim {

RateSegment RateSegment::constant(double t0, double t1, double rate) {
    return RateSegment{Kind::constant, t0, t1, rate};
}

RateSegment RateSegment::linear(double t0, double t1, double rate0, double rate1) {
    RateSegment s{Kind::linear, t0, t1, rate0};
    s.slope = (rate1 - rate0) / (t1 - t0);
    return s;
}

RateSegment RateSegment::sinusoid(double t0, double t1, double base, double amplitude,
                                  double omega, double phase) {
    RateSegment s{Kind::sinusoid, t0, t1, base};
    s.amplitude = amplitude;
    s.omega = omega;
    s.phase = phase;
    return s;
}

double RateSegment::value(double t) const {
    switch (kind) {
        case Kind::constant: return base;
        case Kind::linear: return base + slope * (t - t0);
        case Kind::sinusoid: return base + amplitude * std::sin(omega * t + phase);
    }
    return 0.0;
}

double RateSegment::integral(double ta, double tb) const {
    switch (kind) {
        case Kind::constant:
            return base * (tb - ta);
        case Kind::linear: {
            const double da = ta - t0;
            const double db = tb - t0;
            return base * (tb - ta) + 0.5 * slope * (db * db - da * da);
        }
        case Kind::sinusoid:
            return base * (tb - ta) -
                   (amplitude / omega) *
                       (std::cos(omega * tb + phase) - std::cos(omega * ta + phase));
    }
    return 0.0;
}

std::pair<double, double> RateSegment::min_max(double ta, double tb) const {
    double lo = std::min(value(ta), value(tb));
    double hi = std::max(value(ta), value(tb));
    if (kind == Kind::sinusoid && amplitude != 0.0 && omega != 0.0) {
        // Interior critical points: omega t + phase = pi/2 + k pi.
        const double pi = std::numbers::pi;
        double k = std::ceil((omega * ta + phase - 0.5 * pi) / pi);
        for (;; k += 1.0) {
            const double t = (0.5 * pi + k * pi - phase) / omega;
            if (t > tb) break;
            if (t >= ta) {
                const double v = value(t);
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
        }
    }
    return {lo, hi};
}

ArrivalRateFn::ArrivalRateFn(std::vector<RateSegment> segments)
    : segments_(std::move(segments)) {
    if (segments_.empty()) throw std::invalid_argument("rate function needs segments");
    if (segments_.front().t0 != 0.0)
        throw std::invalid_argument("rate function must start at t = 0");
    knot_cum_.reserve(segments_.size() + 1);
    knot_cum_.push_back(0.0);
    for (std::size_t k = 0; k < segments_.size(); ++k) {
        const RateSegment& s = segments_[k];
        if (!(s.t1 > s.t0)) throw std::invalid_argument("rate segment must have t1 > t0");
        if (k > 0 && segments_[k - 1].t1 != s.t0)
            throw std::invalid_argument("rate segments must be contiguous");
        if (s.kind == RateSegment::Kind::sinusoid && s.omega == 0.0)
            throw std::invalid_argument("sinusoid segment needs omega != 0");
        const auto [lo, hi] = s.min_max(s.t0, s.t1);
        if (lo < 0.0) throw std::invalid_argument("arrival rate must be non-negative");
        if (!std::isfinite(hi)) throw std::invalid_argument("arrival rate must be finite");
        knot_cum_.push_back(knot_cum_.back() + s.integral(s.t0, s.t1));
    }
}

double ArrivalRateFn::horizon() const noexcept {
    return segments_.empty() ? 0.0 : segments_.back().t1;
}

std::size_t ArrivalRateFn::segment_index(double t) const {
    if (t < 0.0 || t > horizon())
        throw std::domain_error("time outside rate function domain");
    // Last segment owns its right endpoint.
    std::size_t lo = 0, hi = segments_.size() - 1;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (t < segments_[mid].t1)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

double ArrivalRateFn::value(double t) const {
    return segments_[segment_index(t)].value(t);
}

double ArrivalRateFn::cumulative(double t) const {
    const std::size_t k = segment_index(t);
    return knot_cum_[k] + segments_[k].integral(segments_[k].t0, t);
}

double ArrivalRateFn::invert_cumulative(double target) const {
    if (target <= 0.0) return 0.0;
    if (target > knot_cum_.back()) return std::numeric_limits<double>::infinity();
    // First segment whose end-cumulative reaches the target.
    const auto it = std::lower_bound(knot_cum_.begin() + 1, knot_cum_.end(), target);
    const std::size_t k = static_cast<std::size_t>(it - knot_cum_.begin()) - 1;
    const RateSegment& s = segments_[k];
    const double d = target - knot_cum_[k];
    if (d <= 0.0) return s.t0;
    switch (s.kind) {
        case RateSegment::Kind::constant:
            return std::min(s.t0 + d / s.base, s.t1);
        case RateSegment::Kind::linear: {
            // Solve base*tau + slope*tau^2/2 = d; stable single-root form.
            const double disc = s.base * s.base + 2.0 * s.slope * d;
            const double denom = s.base + std::sqrt(std::max(disc, 0.0));
            if (denom <= 0.0) return s.t0;
            return std::min(s.t0 + 2.0 * d / denom, s.t1);
        }
        case RateSegment::Kind::sinusoid:
            throw std::runtime_error(
                "cumulative rate not invertible in closed form over sinusoid segments");
    }
    return s.t1;
}

double ArrivalRateFn::lambda_max() const {
    double hi = 0.0;
    for (const RateSegment& s : segments_) hi = std::max(hi, s.min_max(s.t0, s.t1).second);
    return hi;
}

std::pair<double, double> ArrivalRateFn::min_max(double a, double b) const {
    if (!(a <= b)) throw std::invalid_argument("need a <= b");
    const std::size_t ka = segment_index(a);
    const std::size_t kb = segment_index(b);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t k = ka; k <= kb; ++k) {
        const RateSegment& s = segments_[k];
        const auto [slo, shi] = s.min_max(std::max(a, s.t0), std::min(b, s.t1));
        lo = std::min(lo, slo);
        hi = std::max(hi, shi);
    }
    return {lo, hi};
}

bool ArrivalRateFn::coupled_compatible() const noexcept {
    return std::none_of(segments_.begin(), segments_.end(), [](const RateSegment& s) {
        return s.kind == RateSegment::Kind::sinusoid;
    });
}

}  // namespace poolsim
