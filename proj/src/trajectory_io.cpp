#include "poolsim/trajectory_io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "poolsim/rng.hpp"

namespace poolsim {
namespace {

constexpr const char* kEol = "\r\n";  // RFC 4180

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_events_csv(std::ostream& out, const Trajectory& traj) {
    out << "t,kind,level,ell_pre,ell_post" << kEol;
    for (const Event& e : traj.events) {
        out << format_double(e.t) << ',' << to_string(e.kind) << ',' << e.level << ','
            << e.ell_pre << ',' << e.ell_post << kEol;
    }
}

void write_samples_csv(std::ostream& out, const SampleSeries& samples,
                       const std::vector<int>& tail_levels) {
    out << "t,ell,u";
    for (int i = 1; i <= samples.levels; ++i) out << ",q_" << i;
    for (int j : tail_levels) out << ",v_" << j;
    out << kEol;
    for (std::size_t k = 0; k < samples.t.size(); ++k) {
        out << format_double(samples.t[k]) << ',' << samples.ell[k] << ','
            << format_double(samples.u[k]);
        for (int i = 1; i <= samples.levels; ++i)
            out << ',' << format_double(samples.q[static_cast<std::size_t>(i - 1)][k]);
        for (int j : tail_levels) out << ',' << format_double(samples.tail_mass(j, k));
        out << kEol;
    }
}

nlohmann::json summary_json(const Scenario& scenario, const Trajectory& traj) {
    const BoundednessReport bounds = boundedness_report(traj);
    return nlohmann::json{
        {"n", traj.n},
        {"mu", traj.mu},
        {"horizon", traj.horizon},
        {"seed", traj.seed},
        {"mode", to_string(scenario.mode)},
        {"generator", RngStream::generator_name()},
        {"events", traj.events.size()},
        {"arrivals", traj.arrivals},
        {"departures", traj.departures},
        {"final_ell", traj.final_ell},
        {"final_u", traj.final_state.total_mass()},
        {"boundedness", {{"max_tasks_any_pool", bounds.max_tasks_any_pool},
                         {"max_ell", bounds.max_ell}}},
        {"counting_identity_ok", traj.counting_identity_holds()},
    };
}

nlohmann::json certificate_json(const BoundedIntervalCertificate& cert) {
    return nlohmann::json{
        {"a", cert.a},
        {"b", cert.b},
        {"delta", cert.delta},
        {"verdict", to_string(cert.verdict)},
        {"m", cert.m},
        {"rho_min", cert.rho_min},
        {"rho_max", cert.rho_max},
        {"u_a", cert.u_a},
        {"sigma", cert.sigma},
        {"sigma_bd", cert.sigma_bd},
    };
}

nlohmann::json settling_report_json(const SettlingReport& rep) {
    return nlohmann::json{
        {"a", rep.a},
        {"b", rep.b},
        {"sigma_used", rep.sigma_used},
        {"m", rep.m},
        {"delta", rep.delta},
        {"settled", rep.settled},
        {"settled_ell", rep.settled_ell},
        {"last_change_in_interval", rep.last_change_in_interval},
        {"threshold_sup", rep.claim_threshold_sup},
        {"balance_sup", rep.claim_balance_sup},
        {"tail_sup", rep.claim_tail_sup},
        {"tail_sup_v", rep.claim_tail_sup_v},
        {"tail_bound", rep.tail_bound},
    };
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

}  // namespace poolsim
