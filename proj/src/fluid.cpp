#include "poolsim/fluid.hpp"

#include <cmath>
#include <stdexcept>

namespace poolsim {

double FluidSolution::Piece::value(double t, double mu) const {
    double v = p0 + p1 * (t - t0) + c_exp * std::exp(-mu * (t - t0));
    if (cs != 0.0 || cc != 0.0)
        v += cs * std::sin(omega * t + phase) + cc * std::cos(omega * t + phase);
    return v;
}

FluidSolution::FluidSolution(const ArrivalRateFn& lambda, double mu, double u0)
    : mu_(mu), u0_(u0) {
    if (!(mu > 0.0)) throw std::invalid_argument("mu must be positive");
    if (u0 < 0.0) throw std::invalid_argument("u(0) must be non-negative");
    double u_knot = u0;
    for (const RateSegment& s : lambda.segments()) {
        Piece p{};
        p.t0 = s.t0;
        p.t1 = s.t1;
        switch (s.kind) {
            case RateSegment::Kind::constant:
                p.p0 = s.base / mu;
                break;
            case RateSegment::Kind::linear: {
                // rho(t) = rho0 + r (t - t0); steady part rho0 - r/mu + r (t - t0).
                const double rho0 = s.base / mu;
                const double r = s.slope / mu;
                p.p0 = rho0 - r / mu;
                p.p1 = r;
                break;
            }
            case RateSegment::Kind::sinusoid: {
                // Particular solution of x' + mu x = A sin(w t + phi):
                // A (mu sin - w cos) / (mu^2 + w^2).
                const double denom = mu * mu + s.omega * s.omega;
                p.p0 = s.base / mu;
                p.cs = s.amplitude * mu / denom;
                p.cc = -s.amplitude * s.omega / denom;
                p.omega = s.omega;
                p.phase = s.phase;
                break;
            }
        }
        // c_exp is still zero here, so value() gives the steady part alone.
        p.c_exp = u_knot - p.value(p.t0, mu);
        pieces_.push_back(p);
        u_knot = p.value(p.t1, mu);
    }
}

double FluidSolution::value(double t) const {
    if (pieces_.empty() || t < 0.0 || t > horizon())
        throw std::domain_error("time outside fluid solution domain");
    std::size_t lo = 0, hi = pieces_.size() - 1;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (t < pieces_[mid].t1)
            hi = mid;
        else
            lo = mid + 1;
    }
    return pieces_[lo].value(t, mu_);
}

double FluidSolution::horizon() const noexcept {
    return pieces_.empty() ? 0.0 : pieces_.back().t1;
}

FluidSolution solve_u(const Scenario& scenario) {
    return FluidSolution(scenario.lambda, scenario.mu,
                         scenario.initial_occupancy().total_mass());
}

std::optional<LoadBand> classify_interval(const ArrivalRateFn& lambda, double mu, double a,
                                          double b, int delta, double margin) {
    if (delta < 1) throw std::invalid_argument("delta must be >= 1");
    const auto [lam_lo, lam_hi] = lambda.min_max(a, b);
    const double rho_min = lam_lo / mu;
    const double rho_max = lam_hi / mu;
    const double d = static_cast<double>(delta);
    const int m = static_cast<int>(std::floor(rho_min / d));
    if (!(rho_min - m * d > margin)) return std::nullopt;
    if (!((m + 1) * d - rho_max > margin)) return std::nullopt;
    return LoadBand{m, rho_min, rho_max};
}

double settling_time(double a, int m, int delta, const FluidSolution& fluid,
                     double rho_min, double rho_max) {
    const double floor_load = static_cast<double>(m) * delta;
    if (!(rho_min > floor_load))
        throw std::domain_error("settling time needs rho_min > m*delta");
    const double drain = std::log(rho_min / (rho_min - floor_load)) / fluid.mu();
    return drain + settling_time_bd(a, fluid, rho_max, m, delta);
}

double settling_time_bd(double a, const FluidSolution& fluid, double rho_max, int m,
                        int delta) {
    const double u_a = fluid.value(a);
    if (u_a <= rho_max) return 0.0;
    const double ceil_load = static_cast<double>(m + 1) * delta;
    if (!(ceil_load > rho_max))
        throw std::domain_error("settling bound needs rho_max < (m+1)*delta");
    const double log_term = std::log((u_a - rho_max) / (ceil_load - rho_max));
    return std::max(log_term, 0.0) / fluid.mu();
}

double tail_envelope(double t0, double t, const FluidSolution& fluid) {
    if (t < t0) throw std::domain_error("tail envelope needs t >= t0");
    return fluid.value(t0) * std::exp(-fluid.mu() * (t - t0));
}

const char* to_string(BoundedIntervalCertificate::Verdict verdict) noexcept {
    switch (verdict) {
        case BoundedIntervalCertificate::Verdict::certified: return "certified";
        case BoundedIntervalCertificate::Verdict::boundary: return "boundary";
        case BoundedIntervalCertificate::Verdict::not_bounded: return "not_bounded";
    }
    return "?";
}

BoundedIntervalCertificate certify_interval(const ArrivalRateFn& lambda, double mu,
                                            const FluidSolution& fluid, double a, double b,
                                            int delta, double margin) {
    if (!(a < b)) throw std::invalid_argument("need a < b");
    BoundedIntervalCertificate cert;
    cert.a = a;
    cert.b = b;
    cert.delta = delta;
    cert.u_a = fluid.value(a);
    const auto band = classify_interval(lambda, mu, a, b, delta, margin);
    if (!band) return cert;
    cert.m = band->m;
    cert.rho_min = band->rho_min;
    cert.rho_max = band->rho_max;
    cert.sigma = settling_time(a, band->m, delta, fluid, band->rho_min, band->rho_max);
    cert.sigma_bd = settling_time_bd(a, fluid, band->rho_max, band->m, delta);
    const double slack = (b - a) - cert.sigma;
    if (slack > margin)
        cert.verdict = BoundedIntervalCertificate::Verdict::certified;
    else if (slack >= -margin)
        cert.verdict = BoundedIntervalCertificate::Verdict::boundary;
    else
        cert.verdict = BoundedIntervalCertificate::Verdict::not_bounded;
    return cert;
}

}  // namespace poolsim
