#ifndef AWE_ENGINE_HPP
#define AWE_ENGINE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "awe/control.hpp"
#include "awe/scenario.hpp"

namespace awe {

// One decimated log sample. Column order in CSV form is fixed:
// t, phi, theta, r, phi_dot, theta_dot, r_dot, gamma, gamma_reg,
// delta, delta_ref, F_c, T_m, power, phase.
struct LogRow {
  double t = 0.0;
  double phi = 0.0;
  double theta = 0.0;
  double r = 0.0;
  double phi_dot = 0.0;
  double theta_dot = 0.0;
  double r_dot = 0.0;
  double gamma = 0.0;     // NaN where undefined; written as an empty field
  double gamma_reg = 0.0; // finite everywhere
  double delta = 0.0;
  double delta_ref = 0.0;
  double line_force = 0.0;
  double torque = 0.0;
  double power = 0.0;
  Phase phase = Phase::TractionFig8;
};

struct RunResult {
  std::vector<LogRow> log;
  int cycles_completed = 0;
  double end_time = 0.0;
  // Non-fatal anomalies (stall, no net generation), deduplicated.
  std::vector<std::string> warnings;
};

struct RunOptions {
  // Stop once this many full cycles are done (0 = run the whole duration).
  int stop_after_cycles = 0;
};

// Deterministic closed-loop simulation of the scenario. Propagates
// integration failures as NumericBlowup tagged with the simulated time.
RunResult run_simulation(const Scenario& scenario, const RunOptions& opts = {});

Phase phase_from_string(const std::string& name);

void write_log_csv(std::ostream& os, const std::vector<LogRow>& rows);
std::vector<LogRow> read_log_csv(std::istream& in);
std::vector<LogRow> load_log_csv(const std::string& path);

}  // namespace awe

#endif  // AWE_ENGINE_HPP
