#include "poolsim/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "poolsim/metric.hpp"
#include "poolsim/rng.hpp"
#include "poolsim/skeleton.hpp"

namespace poolsim {

double SettlingReport::max_balance_sup() const {
    double hi = 0.0;
    for (double v : claim_balance_sup) hi = std::max(hi, v);
    return hi;
}

double SettlingReport::max_tail_sup() const {
    double hi = 0.0;
    for (double v : claim_tail_sup) hi = std::max(hi, v);
    return hi;
}

SettlingReport check_settling_claims(const Trajectory& traj, const BoundedIntervalCertificate& cert,
                              double sigma_used, const FluidSolution& fluid) {
    if (traj.horizon < cert.b)
        throw std::invalid_argument("trajectory horizon too short for the interval");
    if (!(sigma_used > cert.sigma))
        throw std::invalid_argument("sigma_used must exceed the certificate's sigma");
    const double w0 = cert.a + sigma_used;
    const double w1 = cert.b;
    if (!(w0 <= w1))
        throw std::invalid_argument("settling window is empty");

    SettlingReport rep;
    rep.a = cert.a;
    rep.b = cert.b;
    rep.sigma_used = sigma_used;
    rep.m = cert.m;
    rep.delta = cert.delta;
    rep.tail_bound = fluid.value(w0);

    const int target_ell = cert.m * cert.delta;
    const int tail_from = (cert.m + 1) * cert.delta + 1;  // first tail level
    const int top = std::max(traj.max_level_seen, tail_from - 1);
    rep.claim_balance_sup.assign(static_cast<std::size_t>(target_ell), 0.0);
    rep.claim_tail_sup.assign(static_cast<std::size_t>(top - tail_from + 1), 0.0);

    const double mu = traj.mu;
    bool ell_seen = false;
    int ell_const = -1;
    bool ell_constant = true;

    traj.replay([&](double t0, double t1, const OccupancyMeasure& occ, int ell) {
        const double lo = std::max(t0, w0);
        const double hi = std::min(t1, w1);
        if (lo > hi) return;
        // Suprema of the piecewise-constant coordinates are attained on the
        // piece; the exponentially weighted ones at its right end.
        rep.claim_threshold_sup =
            std::max(rep.claim_threshold_sup, std::fabs(static_cast<double>(ell - target_ell)));
        if (!ell_seen) {
            ell_seen = true;
            ell_const = ell;
        } else if (ell != ell_const) {
            ell_constant = false;
        }
        for (int i = 1; i <= target_ell; ++i)
            rep.claim_balance_sup[static_cast<std::size_t>(i - 1)] =
                std::max(rep.claim_balance_sup[static_cast<std::size_t>(i - 1)],
                         std::fabs(1.0 - occ.fraction(i)));
        const double weight = std::exp(mu * (hi - w0));
        for (int i = tail_from; i <= top; ++i)
            rep.claim_tail_sup[static_cast<std::size_t>(i - tail_from)] =
                std::max(rep.claim_tail_sup[static_cast<std::size_t>(i - tail_from)],
                         occ.fraction(i) * weight);
        rep.claim_tail_sup_v =
            std::max(rep.claim_tail_sup_v, occ.tail_mass(tail_from) * weight);
    });

    rep.settled = ell_seen && ell_constant;
    rep.settled_ell = rep.settled ? ell_const : -1;
    for (const Event& e : traj.events) {
        if ((e.kind == EventKind::threshold_up || e.kind == EventKind::threshold_down) &&
            e.t >= cert.a && e.t <= cert.b)
            rep.last_change_in_interval = e.t;
    }
    return rep;
}

std::vector<std::pair<double, double>> delta_error_series(const Trajectory& traj, int j,
                                                          const ArrivalRateFn& lambda,
                                                          double mu) {
    if (j < 1) throw std::domain_error("error process needs j >= 1");
    const double nd = static_cast<double>(traj.n);
    OccupancyMeasure occ = traj.initial;
    std::int64_t arrivals = 0;
    std::int64_t departures_le_j = 0;
    double compensator = 0.0;  // sum_{i<=j} integral of mu i (q_i - q_{i+1})

    auto drift = [&](const OccupancyMeasure& o) {
        double s = 0.0;
        const int top = std::min(j, o.max_occupied_level());
        for (int i = 1; i <= top; ++i)
            s += mu * static_cast<double>(i) *
                 static_cast<double>(o.count(i) - o.count(i + 1));
        return s / nd;
    };
    auto value = [&](double t) {
        return static_cast<double>(arrivals) / nd - lambda.cumulative(t) -
               (static_cast<double>(departures_le_j) / nd - compensator);
    };

    std::vector<std::pair<double, double>> series;
    series.reserve(2 * traj.events.size() + 2);
    series.emplace_back(0.0, 0.0);
    double t_prev = 0.0;
    std::size_t k = 0;
    while (k < traj.events.size()) {
        const double te = traj.events[k].t;
        compensator += drift(occ) * (te - t_prev);
        series.emplace_back(te, value(te));  // left limit
        while (k < traj.events.size() && traj.events[k].t == te) {
            const Event& e = traj.events[k];
            switch (e.kind) {
                case EventKind::arrival:
                    occ.apply_arrival(e.level);
                    ++arrivals;
                    break;
                case EventKind::departure:
                    occ.apply_departure(e.level);
                    if (e.level <= j) ++departures_le_j;
                    break;
                default: break;
            }
            ++k;
        }
        series.emplace_back(te, value(te));  // post-jump
        t_prev = te;
    }
    compensator += drift(occ) * (traj.horizon - t_prev);
    series.emplace_back(traj.horizon, value(traj.horizon));
    return series;
}

double delta_error_sup(const Trajectory& traj, int j, const ArrivalRateFn& lambda,
                       double mu) {
    double sup = 0.0;
    for (const auto& [t, d] : delta_error_series(traj, j, lambda, mu))
        sup = std::max(sup, std::fabs(d));
    return sup;
}

std::vector<double> fslln_diag(std::uint64_t seed, std::span<const std::int64_t> n_list,
                               double gamma, double T) {
    if (!(gamma >= 0.0 && gamma < 0.5))
        throw std::domain_error("fslln diagnostic needs gamma in [0, 1/2)");
    if (T < 0.0) throw std::domain_error("fslln diagnostic needs T >= 0");
    DrivingSkeleton skel(seed, stream_id::fslln_skeleton);
    std::vector<double> out;
    out.reserve(n_list.size());
    for (const std::int64_t n : n_list) {
        if (n < 1) throw std::domain_error("fslln diagnostic needs n >= 1");
        const double nd = static_cast<double>(n);
        const double horizon = nd * T;
        double sup = 0.0;
        std::size_t k = 0;
        for (;; ++k) {
            const double s = skel.jump(k);
            if (s > horizon) break;
            // Compensated process at the k-th jump, both sides.
            const double kd = static_cast<double>(k);
            sup = std::max({sup, std::fabs(kd + 1.0 - s) / nd, std::fabs(kd - s) / nd});
        }
        sup = std::max(sup, std::fabs(static_cast<double>(k) - horizon) / nd);
        out.push_back(std::pow(nd, gamma) * sup);
    }
    return out;
}

BoundednessReport boundedness_report(const Trajectory& traj) {
    return {traj.max_level_seen, traj.max_ell_seen};
}

double convergence_metric(const SampleSeries& a, const SampleSeries& b) {
    if (a.t.size() != b.t.size() || a.step != b.step)
        throw std::invalid_argument("convergence metric needs matching sample grids");
    std::vector<double> xa(static_cast<std::size_t>(a.levels) + 1);
    std::vector<double> xb(static_cast<std::size_t>(b.levels) + 1);
    xa[0] = xb[0] = 1.0;  // leading coordinate q(0) = 1 for both states
    double sup = 0.0;
    for (std::size_t k = 0; k < a.t.size(); ++k) {
        for (int i = 1; i <= a.levels; ++i)
            xa[static_cast<std::size_t>(i)] = a.q[static_cast<std::size_t>(i - 1)][k];
        for (int i = 1; i <= b.levels; ++i)
            xb[static_cast<std::size_t>(i)] = b.q[static_cast<std::size_t>(i - 1)][k];
        sup = std::max(sup, seq_metric(xa, xb));
    }
    return sup;
}

double total_mass_gap(const Trajectory& traj, const FluidSolution& fluid) {
    double sup = std::fabs(traj.initial.total_mass() - fluid.value(0.0));
    traj.replay([&](double t0, double t1, const OccupancyMeasure& occ, int) {
        const double un = occ.total_mass();
        sup = std::max({sup, std::fabs(un - fluid.value(t0)),
                        std::fabs(un - fluid.value(std::min(t1, traj.horizon)))});
    });
    return sup;
}

}  // namespace poolsim
