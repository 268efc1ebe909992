#pragma once

#include <string>

#include <json.hpp>

#include "poolsim/scenario.hpp"

namespace poolsim {

/// Scenario document schema:
/// {
///   "n": 300, "mu": 1.0, "delta": 3,
///   "alpha": {"exponent": 0.48} | {"value": 0.9},
///   "lambda": [
///     {"type": "constant", "t0": 0, "t1": 3, "rate": 4.5},
///     {"type": "linear", "t0": 3, "t1": 5, "rate0": 4.5, "rate1": 1.5},
///     {"type": "sinusoid", "t0": 5, "t1": 9, "base": 1.5,
///      "amplitude": 0.2, "omega": 10, "phase": 0}
///   ],
///   "T": 9, "init": {"levels": [], "ell0": 0},
///   "seed": 1, "mode": "thinning", "grid": 0.01
/// }
Scenario scenario_from_json(const nlohmann::json& doc);
nlohmann::json scenario_to_json(const Scenario& scenario);

Scenario load_scenario_file(const std::string& path);
void save_scenario_file(const Scenario& scenario, const std::string& path);

/// Two-mode load analog used by the figure-2 harness: mu = 1, offered load
/// 4.5 + 0.8 sin(10 t) on [3, 12] and 1.5 + 0.2 sin(10 t) on [14, 23],
/// linear ramps on [0, 3], [12, 14], [23, 25], initially empty, ell0 = 0,
/// alpha_n = 1 - n^{-0.48}.
Scenario figure2_scenario(int delta, std::int64_t n, std::uint64_t seed);

/// Same plateaus without the fast oscillation (constants 4.5 / 1.5 with the
/// same ramps), which keeps the cumulative rate invertible for coupled runs.
Scenario figure2_pwc_scenario(int delta, std::int64_t n, std::uint64_t seed);

// High-load [3, 12] and low-load [14, 23] windows of the analogs above.
inline constexpr double kFigure2HighA = 3.0;
inline constexpr double kFigure2HighB = 12.0;
inline constexpr double kFigure2LowA = 14.0;
inline constexpr double kFigure2LowB = 23.0;

}  // namespace poolsim
