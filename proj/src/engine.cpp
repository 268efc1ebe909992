#include "poolsim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "poolsim/controller.hpp"
#include "poolsim/dispatch.hpp"

namespace poolsim {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double level_rate(double mu, int level, std::int64_t group) {
    return mu * static_cast<double>(level) * static_cast<double>(group);
}

// State transition model backed by the aggregate occupancy alone; dispatching
// goes through the interval construction.
struct AggregateModel {
    OccupancyMeasure occ;

    explicit AggregateModel(const Scenario& sc) : occ(sc.initial_occupancy()) {}

    int dispatch_and_apply(const PolicyState& policy, double u) {
        const DispatchDecision d = dispatch(occ, policy, u);
        occ.apply_arrival(d.target_level);
        return d.target_level;
    }

    void apply_departure(int level) { occ.apply_departure(level); }
};

// Per-pool ground-truth model: dispatching enumerates eligible pools and
// indexes them with the selection variable; the aggregate view is maintained
// alongside for rates and trajectory output.
struct PerPoolModel {
    OccupancyMeasure occ;
    std::vector<int> pools;

    explicit PerPoolModel(const Scenario& sc) : occ(sc.initial_occupancy()) {
        if (sc.n > 64) throw std::invalid_argument("per-pool oracle limited to n <= 64");
        // Materialize pools matching the aggregate: highest counts first.
        pools.assign(static_cast<std::size_t>(sc.n), 0);
        for (int i = occ.cap(); i >= 1; --i) {
            const std::int64_t with_i = occ.count(i);
            for (std::int64_t p = 0; p < with_i; ++p) {
                auto& cnt = pools[static_cast<std::size_t>(p)];
                if (cnt < i) cnt = i;
            }
        }
    }

    int dispatch_and_apply(const PolicyState& policy, double u) {
        std::vector<int> eligible;
        auto collect_below = [&](int bound) {
            eligible.clear();
            for (std::size_t p = 0; p < pools.size(); ++p)
                if (pools[p] < bound) eligible.push_back(static_cast<int>(p));
        };
        collect_below(policy.ell);
        if (eligible.empty()) collect_below(policy.h());
        if (eligible.empty()) {
            eligible.resize(pools.size());
            for (std::size_t p = 0; p < pools.size(); ++p)
                eligible[p] = static_cast<int>(p);
        }
        std::sort(eligible.begin(), eligible.end(), [&](int a, int b) {
            const int ca = pools[static_cast<std::size_t>(a)];
            const int cb = pools[static_cast<std::size_t>(b)];
            return ca != cb ? ca < cb : a < b;
        });
        const double x = u * static_cast<double>(eligible.size());
        const auto idx =
            std::min(static_cast<std::size_t>(x), eligible.size() - 1);
        const int pid = eligible[idx];
        const int level = pools[static_cast<std::size_t>(pid)] + 1;
        ++pools[static_cast<std::size_t>(pid)];
        occ.apply_arrival(level);
        return level;
    }

    void apply_departure(int level) {
        for (auto& cnt : pools) {
            if (cnt == level) {
                --cnt;
                occ.apply_departure(level);
                return;
            }
        }
        throw std::logic_error("per-pool model out of sync with departure skeleton");
    }
};

struct EventRecorder {
    Trajectory traj;
    std::int64_t init_tasks = 0;

    explicit EventRecorder(const Scenario& sc)
        : traj{sc.n,
               sc.mu,
               sc.horizon,
               sc.seed,
               sc.initial_occupancy(),
               sc.ell0,
               {},
               sc.initial_occupancy(),
               sc.ell0} {
        init_tasks = traj.initial.total_tasks();
        traj.max_level_seen = traj.initial.max_occupied_level();
        traj.max_ell_seen = sc.ell0;
    }

    void record_departure(double t, int level, const PolicyState& pol) {
        traj.events.push_back({t, EventKind::departure, level, pol.ell, pol.ell});
        ++traj.departures;
    }

    void record_arrival(double t, int level, const PolicyState& pol) {
        traj.events.push_back({t, EventKind::arrival, level, pol.ell, pol.ell});
        ++traj.arrivals;
        traj.max_level_seen = std::max(traj.max_level_seen, level);
    }

    void record_threshold(double t, int ell_pre, int ell_post) {
        traj.events.push_back({t,
                               ell_post > ell_pre ? EventKind::threshold_up
                                                  : EventKind::threshold_down,
                               0, ell_pre, ell_post});
        traj.max_ell_seen = std::max(traj.max_ell_seen, ell_post);
    }

    void check_invariants(const OccupancyMeasure& occ, const PolicyState& pol) const {
        occ.validate();
        pol.validate();
        const std::int64_t expected = init_tasks +
                                      static_cast<std::int64_t>(traj.arrivals) -
                                      static_cast<std::int64_t>(traj.departures);
        if (occ.total_tasks() != expected)
            throw std::logic_error("counting identity violated");
    }

    Trajectory finish(const OccupancyMeasure& occ, const PolicyState& pol) && {
        traj.final_state = occ;
        traj.final_ell = pol.ell;
        return std::move(traj);
    }
};

// Arrival bookkeeping shared by every engine: threshold conditions are read
// off the pre-arrival state, the task is dispatched, then the step applies.
template <class Model>
void process_arrival(Model& model, PolicyState& pol, EventRecorder& rec, double t,
                     double u) {
    const int step = threshold_step(model.occ, pol);
    const int level = model.dispatch_and_apply(pol, u);
    rec.record_arrival(t, level, pol);
    if (step != 0) {
        const int ell_pre = pol.ell;
        pol.ell += step;
        rec.record_threshold(t, ell_pre, pol.ell);
    }
    rec.check_invariants(model.occ, pol);
}

template <class Model>
Trajectory run_coupled_core(const Scenario& sc, SkeletonSet& skels, Model model) {
    sc.validate();
    if (!sc.lambda.coupled_compatible())
        throw std::runtime_error(
            "coupled construction requires an invertible cumulative rate");
    if (skels.master_seed() != sc.seed)
        throw std::invalid_argument("skeleton set seeded differently from scenario");

    SelectionStream selections(sc.seed);
    EventRecorder rec(sc);
    PolicyState pol = sc.initial_policy();
    const double T = sc.horizon;
    const double nd = static_cast<double>(sc.n);

    // Next arrival: solve n*Lambda(t) = jump of skeleton 0.
    std::size_t arr_idx = 0;
    auto arrival_epoch = [&](std::size_t k) {
        return sc.lambda.invert_cumulative(skels.arrivals().jump(k) / nd);
    };
    double t_arr = arrival_epoch(arr_idx);

    // Compensator state per departure level (1-based level -> index level-1).
    std::vector<double> consumed;
    std::vector<std::size_t> jump_idx;
    auto ensure_levels = [&](int levels) {
        if (static_cast<int>(consumed.size()) < levels) {
            consumed.resize(static_cast<std::size_t>(levels), 0.0);
            jump_idx.resize(static_cast<std::size_t>(levels), 0);
        }
    };

    double t = 0.0;
    for (;;) {
        const int top = model.occ.max_occupied_level();
        ensure_levels(top);

        double t_dep = kInf;
        int dep_level = 0;
        for (int i = 1; i <= top; ++i) {
            const std::int64_t group = model.occ.count(i) - model.occ.count(i + 1);
            if (group <= 0) continue;
            const double rate = level_rate(sc.mu, i, group);
            const double target = skels.departures(i).jump(jump_idx[i - 1]);
            const double cand = t + std::max(0.0, (target - consumed[i - 1]) / rate);
            if (cand < t_dep) {
                t_dep = cand;
                dep_level = i;
            }
        }

        const double t_next = std::min(t_arr, t_dep);
        const double t_stop = std::min(t_next, T);

        // Internal time accrues at piecewise-constant rates between events.
        for (int i = 1; i <= top; ++i) {
            const std::int64_t group = model.occ.count(i) - model.occ.count(i + 1);
            if (group > 0) consumed[i - 1] += level_rate(sc.mu, i, group) * (t_stop - t);
        }
        if (t_next > T) break;
        t = t_next;

        if (t_dep <= t_arr) {  // departures win simultaneous-timestamp ties
            consumed[dep_level - 1] = skels.departures(dep_level).jump(jump_idx[dep_level - 1]);
            ++jump_idx[dep_level - 1];
            model.apply_departure(dep_level);
            rec.record_departure(t, dep_level, pol);
            rec.check_invariants(model.occ, pol);
        } else {
            process_arrival(model, pol, rec, t, selections.next());
            ++arr_idx;
            t_arr = arrival_epoch(arr_idx);
        }
    }
    return std::move(rec).finish(model.occ, pol);
}

}  // namespace

Trajectory run_thinning(const Scenario& sc) {
    sc.validate();
    RngStream cand_rng(sc.seed, stream_id::thinning_candidates);
    RngStream accept_rng(sc.seed, stream_id::thinning_accept);
    RngStream dep_time_rng(sc.seed, stream_id::thinning_departure_time);
    RngStream dep_pick_rng(sc.seed, stream_id::thinning_departure_pick);
    SelectionStream selections(sc.seed);

    EventRecorder rec(sc);
    AggregateModel model(sc);
    PolicyState pol = sc.initial_policy();
    const double T = sc.horizon;
    const double lam_max = sc.lambda.lambda_max();
    const double cand_rate = static_cast<double>(sc.n) * lam_max;

    double t = 0.0;
    double t_cand = lam_max > 0.0 ? cand_rng.next_exponential() / cand_rate : kInf;
    for (;;) {
        const double total_rate = sc.mu * static_cast<double>(model.occ.total_tasks());
        const double t_dep =
            total_rate > 0.0 ? t + dep_time_rng.next_exponential() / total_rate : kInf;
        const double t_next = std::min(t_cand, t_dep);
        if (t_next > T) break;

        if (t_dep <= t_cand) {  // departures win ties
            t = t_dep;
            // Level picked with probability proportional to i*(Q(i)-Q(i+1)),
            // i.e. uniformly over tasks; the cumulative walk is on integers.
            const double x =
                dep_pick_rng.next_unit() * static_cast<double>(model.occ.total_tasks());
            std::int64_t cum = 0;
            int level = 0;
            for (int i = 1; i <= model.occ.max_occupied_level(); ++i) {
                cum += static_cast<std::int64_t>(i) * (model.occ.count(i) - model.occ.count(i + 1));
                if (static_cast<double>(cum) > x) {
                    level = i;
                    break;
                }
            }
            if (level == 0) level = model.occ.max_occupied_level();
            model.apply_departure(level);
            rec.record_departure(t, level, pol);
            rec.check_invariants(model.occ, pol);
        } else {
            t = t_cand;
            const double lam_t = sc.lambda.value(std::min(t, T));
            if (lam_t > lam_max * (1.0 + 1e-12))
                throw std::runtime_error("scenario error: lambda(t) exceeds lambda_max");
            if (accept_rng.next_unit() * lam_max < lam_t)
                process_arrival(model, pol, rec, t, selections.next());
            t_cand = t + cand_rng.next_exponential() / cand_rate;
        }
    }
    return std::move(rec).finish(model.occ, pol);
}

Trajectory run_coupled(const Scenario& sc) {
    SkeletonSet skels(sc.seed);
    return run_coupled(sc, skels);
}

Trajectory run_coupled(const Scenario& sc, SkeletonSet& skeletons) {
    return run_coupled_core(sc, skeletons, AggregateModel(sc));
}

Trajectory run_oracle(const Scenario& sc) {
    SkeletonSet skels(sc.seed);
    return run_oracle(sc, skels);
}

Trajectory run_oracle(const Scenario& sc, SkeletonSet& skeletons) {
    return run_coupled_core(sc, skeletons, PerPoolModel(sc));
}

Trajectory run(const Scenario& sc) {
    switch (sc.mode) {
        case EngineMode::thinning: return run_thinning(sc);
        case EngineMode::coupled: return run_coupled(sc);
        case EngineMode::oracle: return run_oracle(sc);
    }
    throw std::invalid_argument("unknown engine mode");
}

}  // namespace poolsim
