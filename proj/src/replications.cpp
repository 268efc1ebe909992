#include "poolsim/replications.hpp"

#include <cstddef>
#include <exception>
#include <stdexcept>

namespace poolsim {

std::vector<Trajectory> run_batch_serial(std::span<const Scenario> scenarios) {
    std::vector<Trajectory> out;
    out.reserve(scenarios.size());
    for (const Scenario& sc : scenarios) out.push_back(run(sc));
    return out;
}

std::vector<Trajectory> run_batch_parallel(std::span<const Scenario> scenarios) {
    std::vector<Trajectory> out(scenarios.size());
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(scenarios.size()); ++i) {
        try {
            out[static_cast<std::size_t>(i)] = run(scenarios[static_cast<std::size_t>(i)]);
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return out;
}

std::vector<Trajectory> run_batch(std::span<const Scenario> scenarios, bool parallel) {
    return parallel ? run_batch_parallel(scenarios) : run_batch_serial(scenarios);
}

}  // namespace poolsim
