#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "poolsim/analysis.hpp"
#include "poolsim/scenario.hpp"
#include "poolsim/trajectory.hpp"

namespace poolsim {

// "%.17g" rendering shared by every CSV column; round-trips doubles exactly.
std::string format_double(double v);

// RFC 4180 output (CRLF line endings). Events: t,kind,level,ell_pre,ell_post.
void write_events_csv(std::ostream& out, const Trajectory& traj);

// Samples: t,ell,u,q_1..q_K plus one v_j column per requested tail level.
void write_samples_csv(std::ostream& out, const SampleSeries& samples,
                       const std::vector<int>& tail_levels = {});

nlohmann::json summary_json(const Scenario& scenario, const Trajectory& traj);

nlohmann::json certificate_json(const BoundedIntervalCertificate& cert);
nlohmann::json settling_report_json(const SettlingReport& report);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace poolsim
