#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "poolsim/arrival_rate.hpp"
#include "poolsim/fluid.hpp"
#include "poolsim/trajectory.hpp"

namespace poolsim {

/// Empirical counterparts of the settling and balance claims on a certified
/// interval. All suprema are taken over event times plus window endpoints,
/// which is exact for the piecewise-constant processes involved.
struct SettlingReport {
    double a = 0.0, b = 0.0;
    double sigma_used = 0.0;
    int m = 0;
    int delta = 1;

    bool settled = false;   // threshold constant on [a + sigma_used, b]
    int settled_ell = -1;   // the constant, when settled
    double last_change_in_interval = -1.0;  // last threshold-change time in [a, b]

    double claim_threshold_sup = 0.0;  // sup |ell(t) - m*delta| over the window
    std::vector<double> claim_balance_sup;  // per level i = 1..m*delta: sup |1 - q(t,i)|
    std::vector<double> claim_tail_sup;     // per level i > (m+1)*delta: sup q e^{mu(t-w0)}
    double claim_tail_sup_v = 0.0;  // same statistic on v(t, (m+1)*delta + 1)
    double tail_bound = 0.0;        // u(a + sigma_used)

    double max_balance_sup() const;
    double max_tail_sup() const;
};

SettlingReport check_settling_claims(const Trajectory& traj, const BoundedIntervalCertificate& cert,
                              double sigma_used, const FluidSolution& fluid);

/// Error process delta_n(t, j): centred arrival mass minus the centred
/// departure masses of the first j levels, with the compensator integrals
/// computed exactly from the event log. Points are emitted at t = 0, both
/// sides of every event time, and the horizon.
std::vector<std::pair<double, double>> delta_error_series(const Trajectory& traj, int j,
                                                          const ArrivalRateFn& lambda,
                                                          double mu);

double delta_error_sup(const Trajectory& traj, int j, const ArrivalRateFn& lambda,
                       double mu);

/// Per-n statistic sup_{t in [0,T]} n^gamma |N(nt)/n - t| for one unit-rate
/// skeleton keyed by the seed; exact because the sup is attained at jumps.
std::vector<double> fslln_diag(std::uint64_t seed, std::span<const std::int64_t> n_list,
                               double gamma, double T);

struct BoundednessReport {
    int max_tasks_any_pool = 0;
    int max_ell = 0;
};

BoundednessReport boundedness_report(const Trajectory& traj);

/// sup_t d(q_a(t), q_b(t)) over a shared sample grid: the uniform metric on
/// occupancy paths, restricted to the grid.
double convergence_metric(const SampleSeries& a, const SampleSeries& b);

/// sup_t |u_n(t) - u(t)| evaluated at both sides of every event and at the
/// endpoints.
double total_mass_gap(const Trajectory& traj, const FluidSolution& fluid);

}  // namespace poolsim
