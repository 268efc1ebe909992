#include "poolsim/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace poolsim {

const char* to_string(EventKind kind) noexcept {
    switch (kind) {
        case EventKind::arrival: return "arrival";
        case EventKind::departure: return "departure";
        case EventKind::threshold_up: return "threshold_up";
        case EventKind::threshold_down: return "threshold_down";
    }
    return "?";
}

double SampleSeries::tail_mass(int j, std::size_t k) const {
    if (j < 1) throw std::domain_error("tail mass level must be >= 1");
    double sum = 0.0;
    for (int i = j; i <= levels; ++i) sum += q[static_cast<std::size_t>(i - 1)][k];
    return sum;
}

SampleSeries Trajectory::sample(double step, int levels) const {
    if (!(step > 0.0)) throw std::invalid_argument("sample step must be positive");
    if (levels <= 0) levels = std::max(1, max_level_seen + 1);

    SampleSeries s;
    s.step = step;
    s.levels = levels;
    const auto points = static_cast<std::size_t>(std::floor(horizon / step + 1e-9)) + 1;
    s.t.reserve(points);
    s.ell.reserve(points);
    s.u.reserve(points);
    s.q.assign(static_cast<std::size_t>(levels), {});
    for (auto& col : s.q) col.reserve(points);

    std::size_t next = 0;
    auto emit_until = [&](double t1, const OccupancyMeasure& occ, int ell) {
        // Grid points in [t, t1) take this piece's (cadlag) state.
        while (next < points) {
            const double g = static_cast<double>(next) * step;
            if (g >= t1) break;
            s.t.push_back(g);
            s.ell.push_back(ell);
            s.u.push_back(occ.total_mass());
            for (int i = 1; i <= levels; ++i)
                s.q[static_cast<std::size_t>(i - 1)].push_back(occ.fraction(i));
            ++next;
        }
    };
    replay([&](double, double t1, const OccupancyMeasure& occ, int ell) {
        emit_until(t1, occ, ell);
    });
    // Remaining points (the horizon itself, or everything if there were no
    // events) carry the final state.
    while (next < points) {
        const double g = static_cast<double>(next) * step;
        s.t.push_back(g);
        s.ell.push_back(final_ell);
        s.u.push_back(final_state.total_mass());
        for (int i = 1; i <= levels; ++i)
            s.q[static_cast<std::size_t>(i - 1)].push_back(final_state.fraction(i));
        ++next;
    }
    return s;
}

bool Trajectory::counting_identity_holds() const noexcept {
    const std::int64_t lhs = final_state.total_tasks() - initial.total_tasks();
    return lhs == static_cast<std::int64_t>(arrivals) - static_cast<std::int64_t>(departures);
}

}  // namespace poolsim
