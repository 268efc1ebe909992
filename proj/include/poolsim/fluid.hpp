#pragma once

#include <optional>
#include <vector>

#include "poolsim/arrival_rate.hpp"
#include "poolsim/scenario.hpp"

namespace poolsim {

/// Closed-form solution of u' = lambda(t) - mu u on the arrival function's
/// domain, built segment by segment with continuity at the knots. No ODE
/// stepping, so sigma computations carry no integrator error.
class FluidSolution {
public:
    FluidSolution(const ArrivalRateFn& lambda, double mu, double u0);

    double value(double t) const;  // u(t)
    double mu() const noexcept { return mu_; }
    double u0() const noexcept { return u0_; }
    double horizon() const noexcept;

private:
    struct Piece {
        double t0, t1;
        double p0, p1;      // polynomial part p0 + p1*(t - t0)
        double cs, cc;      // cs*sin(omega t + phase) + cc*cos(omega t + phase)
        double omega, phase;
        double c_exp;       // coefficient of e^{-mu (t - t0)}

        double value(double t, double mu) const;
    };

    double mu_;
    double u0_;
    std::vector<Piece> pieces_;
};

FluidSolution solve_u(const Scenario& scenario);

/// Result of the sandwich test m*delta < rho_min <= rho_max < (m+1)*delta.
struct LoadBand {
    int m = 0;
    double rho_min = 0.0;
    double rho_max = 0.0;
};

// Exact extremum analysis of rho = lambda/mu on [a, b]; nullopt when no
// integer m satisfies the sandwich with the given strictness margin.
std::optional<LoadBand> classify_interval(const ArrivalRateFn& lambda, double mu, double a,
                                          double b, int delta, double margin = 1e-9);

// Settling-time bound sigma(a, b, m, delta): the drain term plus the positive
// part of the overload term when u(a) > rho_max.
double settling_time(double a, int m, int delta, const FluidSolution& fluid,
                     double rho_min, double rho_max);

// The overload term alone (the bound past which the threshold stays <= m*delta).
double settling_time_bd(double a, const FluidSolution& fluid, double rho_max, int m,
                        int delta);

// Exponential tail envelope u(t0) e^{-mu (t - t0)}, t >= t0.
double tail_envelope(double t0, double t, const FluidSolution& fluid);

struct BoundedIntervalCertificate {
    enum class Verdict { certified, boundary, not_bounded };

    double a = 0.0, b = 0.0;
    int m = 0;
    int delta = 1;
    double rho_min = 0.0, rho_max = 0.0;
    double u_a = 0.0;
    double sigma = 0.0;
    double sigma_bd = 0.0;
    Verdict verdict = Verdict::not_bounded;

    bool certified() const noexcept { return verdict == Verdict::certified; }
};

const char* to_string(BoundedIntervalCertificate::Verdict verdict) noexcept;

// Full bounded-interval check on [a, b]: sandwich, sigma, and the interval
// length requirement b - a > sigma. Length within `margin` of sigma is
// reported as boundary rather than pass/fail.
BoundedIntervalCertificate certify_interval(const ArrivalRateFn& lambda, double mu,
                                            const FluidSolution& fluid, double a, double b,
                                            int delta, double margin = 1e-9);

}  // namespace poolsim
