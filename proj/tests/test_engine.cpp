#include <doctest.h>

#include <cmath>
#include <vector>

#include "poolsim/controller.hpp"
#include "poolsim/engine.hpp"
#include "poolsim/scenario_io.hpp"
#include "support.hpp"

using namespace poolsim;

namespace {

Scenario base_scenario(std::int64_t n, double T, std::uint64_t seed) {
    Scenario sc;
    sc.n = n;
    sc.mu = 1.0;
    sc.delta = 1;
    sc.alpha = AlphaRule{AlphaRule::Kind::value, 0.6};
    sc.lambda = ArrivalRateFn({RateSegment::constant(0.0, T, 1.5)});
    sc.horizon = T;
    sc.seed = seed;
    sc.mode = EngineMode::coupled;
    return sc;
}

// Events must be strictly ordered in time, except threshold changes that
// share their arrival's timestamp and follow it.
void check_event_ordering(const Trajectory& traj) {
    for (std::size_t k = 1; k < traj.events.size(); ++k) {
        const Event& prev = traj.events[k - 1];
        const Event& cur = traj.events[k];
        if (cur.t == prev.t) {
            CHECK(prev.kind == EventKind::arrival);
            CHECK((cur.kind == EventKind::threshold_up ||
                   cur.kind == EventKind::threshold_down));
        } else {
            CHECK(cur.t > prev.t);
        }
    }
}

}  // namespace

TEST_SUITE("engine") {

TEST_CASE("pure death chain drains top-down") {
    Scenario sc;
    sc.n = 1;
    sc.mu = 1.0;
    sc.delta = 1;
    sc.alpha = AlphaRule{AlphaRule::Kind::value, 0.5};
    sc.lambda = ArrivalRateFn({RateSegment::constant(0.0, 100.0, 0.0)});
    sc.horizon = 100.0;
    sc.init_levels = {1, 1, 1};  // one pool with three tasks
    sc.seed = 42;
    sc.mode = EngineMode::coupled;

    using Runner = Trajectory (*)(const Scenario&);
    for (Runner runner : {static_cast<Runner>(run_coupled), run_thinning}) {
        const Trajectory traj = runner(sc);
        REQUIRE(traj.events.size() == 3);
        CHECK(traj.events[0].kind == EventKind::departure);
        CHECK(traj.events[0].level == 3);
        CHECK(traj.events[1].level == 2);
        CHECK(traj.events[2].level == 1);
        CHECK(traj.final_state.total_tasks() == 0);
        CHECK(traj.counting_identity_holds());
    }
}

TEST_CASE("two-pool hand stepping") {
    // Empty start, ell = 0: the first arrival is forced to level 1 (mid band)
    // and cannot move the threshold; an increase requires a pre-arrival state
    // with count(delta) >= n - 1.
    for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
        Scenario sc = base_scenario(2, 5.0, seed);
        const Trajectory traj = run_coupled(sc);
        REQUIRE(!traj.events.empty());
        bool saw_arrival = false;
        for (const Event& e : traj.events) {
            if (e.kind == EventKind::arrival) {
                CHECK(e.level == 1);
                saw_arrival = true;
                break;
            }
        }
        CHECK(saw_arrival);
        // No threshold event may precede the second arrival.
        int arrivals_seen = 0;
        for (const Event& e : traj.events) {
            if (e.kind == EventKind::arrival) ++arrivals_seen;
            if (e.kind == EventKind::threshold_up || e.kind == EventKind::threshold_down)
                CHECK(arrivals_seen >= 2);
        }
        check_event_ordering(traj);
    }
}

TEST_CASE("threshold changes replay from pre-arrival states") {
    // Recompute every threshold step from the state right before each
    // arrival; the engine's sequencing must match.
    Scenario sc = base_scenario(8, 8.0, 99);
    sc.delta = 2;
    const Trajectory traj = run_coupled(sc);
    OccupancyMeasure occ = traj.initial;
    PolicyState pol = sc.initial_policy();
    std::size_t k = 0;
    while (k < traj.events.size()) {
        const Event& e = traj.events[k];
        if (e.kind == EventKind::arrival) {
            const int step = threshold_step(occ, pol);
            occ.apply_arrival(e.level);
            ++k;
            if (step != 0) {
                REQUIRE(k < traj.events.size());
                const Event& te = traj.events[k];
                CHECK(te.t == e.t);
                CHECK(te.ell_post == pol.ell + step);
                pol.ell += step;
                ++k;
            } else if (k < traj.events.size() && traj.events[k].t == e.t) {
                CHECK(traj.events[k].kind == EventKind::departure);
            }
        } else if (e.kind == EventKind::departure) {
            occ.apply_departure(e.level);
            ++k;
        } else {
            FAIL("unexpected threshold event without preceding arrival");
        }
    }
    CHECK(occ == traj.final_state);
    CHECK(pol.ell == traj.final_ell);
}

TEST_CASE("counting identity and ordering on a busy run") {
    Scenario sc = figure2_pwc_scenario(3, 50, 7);
    const Trajectory traj = run_coupled(sc);
    CHECK(traj.counting_identity_holds());
    CHECK(traj.arrivals > 0);
    CHECK(traj.departures > 0);
    check_event_ordering(traj);
    CHECK(traj.max_ell_seen % sc.delta == 0);
}

TEST_CASE("same seed reproduces bitwise-identical logs") {
    const Scenario sc = figure2_pwc_scenario(1, 30, 11);
    const Trajectory a = run_coupled(sc);
    const Trajectory b = run_coupled(sc);
    CHECK(a.events == b.events);
    CHECK(a.final_state == b.final_state);

    Scenario st = figure2_scenario(1, 30, 11);
    const Trajectory c = run_thinning(st);
    const Trajectory d = run_thinning(st);
    CHECK(c.events == d.events);
}

TEST_CASE("different n consume the same skeleton prefix") {
    Scenario a = base_scenario(10, 4.0, 5);
    Scenario b = base_scenario(20, 4.0, 5);
    const Trajectory ta = run_coupled(a);
    const Trajectory tb = run_coupled(b);
    std::vector<double> sa, sb;  // internal jump targets consumed by arrivals
    for (const Event& e : ta.events)
        if (e.kind == EventKind::arrival) sa.push_back(10.0 * a.lambda.cumulative(e.t));
    for (const Event& e : tb.events)
        if (e.kind == EventKind::arrival) sb.push_back(20.0 * b.lambda.cumulative(e.t));
    const std::size_t common = std::min(sa.size(), sb.size());
    REQUIRE(common > 10);
    for (std::size_t k = 0; k < common; ++k)
        CHECK(sa[k] == doctest::Approx(sb[k]).epsilon(1e-9));
}

TEST_CASE("oracle equals coupled on aggregate paths") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Scenario sc = base_scenario(4, 6.0, 100 + seed);
        sc.delta = 2;
        const Trajectory agg = run_coupled(sc);
        const Trajectory oracle = run_oracle(sc);
        CHECK(agg.events == oracle.events);
        CHECK(agg.final_state == oracle.final_state);
        CHECK(agg.final_ell == oracle.final_ell);
    }
}

TEST_CASE("oracle equals coupled from a preloaded state") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        Scenario sc = base_scenario(6, 5.0, 300 + seed);
        sc.delta = 2;
        sc.init_levels = {6, 4, 4, 1};  // mixed occupancy, pools at 1..4 tasks
        sc.ell0 = 2;
        const Trajectory agg = run_coupled(sc);
        const Trajectory oracle = run_oracle(sc);
        CHECK(agg.events == oracle.events);
        CHECK(agg.final_state == oracle.final_state);
        CHECK(agg.final_ell == oracle.final_ell);
    }
}

TEST_CASE("a shared skeleton set replays exactly") {
    // Extending the jump memos through a smaller run must not perturb a
    // later run at a different n.
    Scenario small = base_scenario(50, 6.0, 21);
    Scenario large = base_scenario(200, 6.0, 21);
    const Trajectory fresh = run_coupled(large);
    SkeletonSet shared(21);
    (void)run_coupled(small, shared);
    const Trajectory reused = run_coupled(large, shared);
    CHECK(fresh.events == reused.events);
    CHECK(fresh.final_state == reused.final_state);
    // Mismatched seeds are refused.
    SkeletonSet wrong(22);
    CHECK_THROWS(run_coupled(large, wrong));
}

TEST_CASE("oracle refuses large systems") {
    Scenario sc = base_scenario(65, 1.0, 1);
    CHECK_THROWS(run_oracle(sc));
}

TEST_CASE("coupled mode rejects sinusoid rates") {
    Scenario sc = figure2_scenario(1, 20, 3);  // sinusoidal analog
    CHECK_THROWS(run_coupled(sc));
    CHECK_NOTHROW(run_thinning(sc));
}

TEST_CASE("M/M/infinity reduction matches the offered load") {
    // Huge delta pins ell = 0 (no increase can fire), tiny alpha blocks
    // decreases, so arrivals go to a uniformly random pool: per-pool M/M/inf.
    Scenario sc;
    sc.n = 100;
    sc.mu = 1.0;
    sc.delta = 1000000;
    sc.alpha = AlphaRule{AlphaRule::Kind::value, 0.01};
    sc.lambda = ArrivalRateFn({RateSegment::constant(0.0, 50.0, 2.0)});
    sc.horizon = 50.0;
    sc.seed = 2024;
    sc.mode = EngineMode::coupled;
    const Trajectory traj = run_coupled(sc);
    CHECK(traj.final_ell == 0);
    double time_avg = 0.0;
    traj.replay([&](double t0, double t1, const OccupancyMeasure& occ, int) {
        time_avg += occ.total_mass() * (t1 - t0);
    });
    time_avg /= sc.horizon;
    CHECK(time_avg == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("thinning and coupled agree in law") {
    // Arrival counts and u_n(T) across 200 seeds, compared at 3 standard
    // errors of the difference.
    const int seeds = 200;
    std::vector<double> arr_thin, arr_coup, u_thin, u_coup;
    for (int s = 0; s < seeds; ++s) {
        Scenario sc = figure2_pwc_scenario(1, 20, 5000 + static_cast<std::uint64_t>(s));
        sc.horizon = 6.0;  // clip to the ramp + high plateau
        const Trajectory tc = run_coupled(sc);
        sc.mode = EngineMode::thinning;
        const Trajectory tt = run_thinning(sc);
        arr_coup.push_back(static_cast<double>(tc.arrivals));
        arr_thin.push_back(static_cast<double>(tt.arrivals));
        u_coup.push_back(tc.final_state.total_mass());
        u_thin.push_back(tt.final_state.total_mass());
    }
    auto se = [&](const std::vector<double>& xs) {
        return test::stddev(xs) / std::sqrt(static_cast<double>(xs.size()));
    };
    const double d_arr = std::fabs(test::mean(arr_thin) - test::mean(arr_coup));
    CHECK(d_arr <= 3.0 * std::hypot(se(arr_thin), se(arr_coup)));
    const double d_u = std::fabs(test::mean(u_thin) - test::mean(u_coup));
    CHECK(d_u <= 3.0 * std::hypot(se(u_thin), se(u_coup)));
}

TEST_CASE("lambda horizon must cover the scenario horizon") {
    Scenario sc = base_scenario(5, 10.0, 1);
    sc.lambda = ArrivalRateFn({RateSegment::constant(0.0, 5.0, 1.0)});
    CHECK_THROWS(run(sc));
}

}  // TEST_SUITE
