#pragma once

#include <span>
#include <vector>

#include "poolsim/engine.hpp"
#include "poolsim/scenario.hpp"
#include "poolsim/trajectory.hpp"

namespace poolsim {

/// Independent-replication runners. Each scenario owns its randomness, so the
/// parallel runner must produce results identical to the serial reference;
/// tests and the benchmark tool compare the two.
std::vector<Trajectory> run_batch_serial(std::span<const Scenario> scenarios);
std::vector<Trajectory> run_batch_parallel(std::span<const Scenario> scenarios);
std::vector<Trajectory> run_batch(std::span<const Scenario> scenarios, bool parallel = true);

}  // namespace poolsim
