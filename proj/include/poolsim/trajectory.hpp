#pragma once

#include <cstdint>
#include <vector>

#include "poolsim/occupancy.hpp"

namespace poolsim {

enum class EventKind : std::uint8_t { arrival, departure, threshold_up, threshold_down };

const char* to_string(EventKind kind) noexcept;

struct Event {
    double t = 0.0;
    EventKind kind = EventKind::arrival;
    int level = 0;  // occupancy level for arrival/departure, 0 for threshold events
    int ell_pre = 0;
    int ell_post = 0;

    bool operator==(const Event&) const = default;
};

/// Column-oriented samples of the piecewise-constant state on a uniform grid.
struct SampleSeries {
    double step = 0.0;
    int levels = 0;  // occupancy columns 1..levels
    std::vector<double> t;
    std::vector<int> ell;
    std::vector<double> u;
    std::vector<std::vector<double>> q;  // q[i-1][k] = fraction(i) at t[k]

    double tail_mass(int j, std::size_t k) const;  // v(t[k], j) from the columns
};

/// Event log plus endpoints of one simulation run. The log is the source of
/// truth; sampled series and analysis statistics are replayed from it.
struct Trajectory {
    std::int64_t n = 1;
    double mu = 1.0;
    double horizon = 0.0;
    std::uint64_t seed = 0;

    OccupancyMeasure initial{1};
    int ell0 = 0;

    std::vector<Event> events;

    OccupancyMeasure final_state{1};
    int final_ell = 0;

    std::uint64_t arrivals = 0;
    std::uint64_t departures = 0;
    int max_level_seen = 0;  // highest occupied level over the whole run
    int max_ell_seen = 0;

    // Piecewise-constant replay: visit(t0, t1, occ, ell) for each maximal
    // interval on which the state is constant. Events sharing a timestamp are
    // folded into one transition (cadlag state).
    template <class Visitor>
    void replay(Visitor&& visit) const;

    SampleSeries sample(double step, int levels = 0) const;  // levels 0 = auto

    // Exact identity n*u(T) = n*u(0) + arrivals - departures.
    bool counting_identity_holds() const noexcept;
};

template <class Visitor>
void Trajectory::replay(Visitor&& visit) const {
    OccupancyMeasure occ = initial;
    int ell = ell0;
    double t = 0.0;
    std::size_t k = 0;
    while (k < events.size()) {
        const double te = events[k].t;
        if (te > t) visit(t, te, occ, ell);
        while (k < events.size() && events[k].t == te) {
            const Event& e = events[k];
            switch (e.kind) {
                case EventKind::arrival: occ.apply_arrival(e.level); break;
                case EventKind::departure: occ.apply_departure(e.level); break;
                case EventKind::threshold_up:
                case EventKind::threshold_down: ell = e.ell_post; break;
            }
            ++k;
        }
        t = te;
    }
    if (t < horizon) visit(t, horizon, occ, ell);
}

}  // namespace poolsim
