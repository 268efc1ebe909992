// Compares the serial replication runner against the OpenMP one on the same
// batch and verifies the outputs are identical.
#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <vector>

#include "poolsim/replications.hpp"
#include "poolsim/scenario_io.hpp"

using namespace poolsim;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP replication benchmark"};
    std::int64_t n = 300;
    int seeds = 8;
    int delta = 3;
    bool thinning = false;
    app.add_option("--n", n, "pool count");
    app.add_option("--seeds", seeds, "replications");
    app.add_option("--delta", delta, "threshold step");
    app.add_flag("--thinning", thinning, "use the sinusoidal scenario in thinning mode");
    CLI11_PARSE(app, argc, argv);

    std::vector<Scenario> batch;
    for (int s = 0; s < seeds; ++s) {
        batch.push_back(thinning
                            ? figure2_scenario(delta, n, static_cast<std::uint64_t>(s + 1))
                            : figure2_pwc_scenario(delta, n, static_cast<std::uint64_t>(s + 1)));
    }

    auto t0 = Clock::now();
    const auto serial = run_batch_serial(batch);
    const double t_serial = seconds_since(t0);

    t0 = Clock::now();
    const auto parallel = run_batch_parallel(batch);
    const double t_parallel = seconds_since(t0);

    bool identical = serial.size() == parallel.size();
    std::uint64_t events = 0;
    for (std::size_t i = 0; identical && i < serial.size(); ++i) {
        identical = serial[i].events == parallel[i].events &&
                    serial[i].final_state == parallel[i].final_state;
        events += serial[i].events.size();
    }

    std::cout << "replications: " << seeds << "  n: " << n << "  events: " << events << '\n'
              << "serial:   " << t_serial << " s\n"
              << "parallel: " << t_parallel << " s  (speedup "
              << (t_parallel > 0 ? t_serial / t_parallel : 0.0) << "x)\n"
              << "identical: " << (identical ? "yes" : "NO") << '\n';
    return identical ? 0 : 1;
}
