#include "awe/engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include "awe/dynamics.hpp"
#include "awe/errors.hpp"
#include "awe/reduced_models.hpp"

namespace awe {

namespace {

void add_warning(std::vector<std::string>& warnings, const std::string& msg) {
  if (std::find(warnings.begin(), warnings.end(), msg) == warnings.end()) {
    warnings.push_back(msg);
  }
}

// Discretized Ornstein-Uhlenbeck perturbation on the nominal wind speed.
class GustProcess {
public:
  GustProcess(const WindConfig& cfg, double dt)
      : enabled_(cfg.gust_enabled),
        bandwidth_(cfg.gust_bandwidth),
        scale_(cfg.gust_intensity * std::sqrt(2.0 * cfg.gust_bandwidth * dt)),
        dt_(dt),
        rng_(cfg.seed) {}

  double advance() {
    if (!enabled_) return 0.0;
    value_ += -bandwidth_ * value_ * dt_ + scale_ * normal_(rng_);
    return value_;
  }

private:
  bool enabled_;
  double bandwidth_;
  double scale_;
  double dt_;
  double value_ = 0.0;
  std::mt19937 rng_;
  std::normal_distribution<double> normal_;
};

std::string format_value(double v) {
  if (std::isnan(v)) return ""; // explicit gap
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

constexpr const char* kLogHeader =
    "t,phi,theta,r,phi_dot,theta_dot,r_dot,gamma,gamma_reg,delta,delta_ref,"
    "F_c,T_m,power,phase";

}  // namespace

RunResult run_simulation(const Scenario& scenario, const RunOptions& opts) {
  validate(scenario);

  RunResult result;
  KinematicState state = scenario.initial_state();
  ActuatorState act;
  Supervisor sup(scenario.controller, scenario.winch, scenario.retraction_law,
                 scenario.params);
  GustProcess gust(scenario.wind, scenario.sim.dt);
  const WindField base_wind = scenario.wind.field();

  const double dt = scenario.sim.dt;
  const long long n_steps =
      static_cast<long long>(std::llround(scenario.sim.duration / dt));
  const double drum_radius = scenario.winch.drum_radius;

  double net_energy = 0.0;
  double gamma_reg_held = 0.0;
  bool has_gamma_reg = false;
  double t = 0.0;

  result.log.reserve(static_cast<std::size_t>(n_steps / scenario.sim.decimation) + 1);

  for (long long step = 0; step < n_steps; ++step) {
    t = static_cast<double>(step) * dt;

    WindField wind = base_wind;
    wind.w0 = std::max(0.0, base_wind.w0 + gust.advance());

    SupervisorOutput cmd;
    try {
      cmd = sup.step(state, wind);
    } catch (const SimulationError& e) {
      throw NumericBlowup(std::string(e.what()) + " (controller, t=" +
                          std::to_string(t) + " s)");
    }

    const double delta = steering_output(act, scenario.actuator);
    const double line_force = cmd.torque / drum_radius;

    if (apparent_wind(state, wind).norm() < kStallApparentWind) {
      add_warning(result.warnings, "apparent wind below stall threshold");
    }

    try {
      gamma_reg_held =
          regularized_velocity_angle(state, wind, scenario.controller.regularization_c);
      has_gamma_reg = true;
    } catch (const UndefinedAngle&) {
      if (!has_gamma_reg) gamma_reg_held = 0.0;
    }

    const double power = mechanical_power(line_force, state.r_dot);
    net_energy += power * dt;

    if (step % scenario.sim.decimation == 0) {
      LogRow row;
      row.t = t;
      row.phi = state.phi;
      row.theta = state.theta;
      row.r = state.r;
      row.phi_dot = state.phi_dot;
      row.theta_dot = state.theta_dot;
      row.r_dot = state.r_dot;
      try {
        row.gamma = velocity_angle(state);
      } catch (const UndefinedVelocityAngle&) {
        row.gamma = std::numeric_limits<double>::quiet_NaN();
      }
      row.gamma_reg = gamma_reg_held;
      row.delta = delta;
      row.delta_ref = cmd.delta_ref;
      row.line_force = line_force;
      row.torque = cmd.torque;
      row.power = power;
      row.phase = cmd.phase;
      result.log.push_back(row);
    }

    try {
      state = integrate_step(state, wind, delta, line_force, scenario.params, dt);
    } catch (const SimulationError& e) {
      throw NumericBlowup(std::string(e.what()) + " (t=" + std::to_string(t) + " s)");
    }
    act = actuator_step(act, scenario.actuator, cmd.delta_ref, dt);

    if (opts.stop_after_cycles > 0 &&
        sup.cycles_completed() >= opts.stop_after_cycles) {
      break;
    }
  }

  result.cycles_completed = sup.cycles_completed();
  result.end_time = t + dt;
  if (net_energy <= 0.0) {
    add_warning(result.warnings, "run produced no positive net energy");
  }
  return result;
}

Phase phase_from_string(const std::string& name) {
  if (name == "traction") return Phase::TractionFig8;
  if (name == "transition_to_border") return Phase::TransitionToBorder;
  if (name == "retraction") return Phase::Retraction;
  if (name == "transition_to_traction") return Phase::TransitionToTraction;
  throw ParseError("unknown phase '" + name + "'");
}

void write_log_csv(std::ostream& os, const std::vector<LogRow>& rows) {
  os << kLogHeader << '\n';
  for (const LogRow& r : rows) {
    os << format_value(r.t) << ',' << format_value(r.phi) << ','
       << format_value(r.theta) << ',' << format_value(r.r) << ','
       << format_value(r.phi_dot) << ',' << format_value(r.theta_dot) << ','
       << format_value(r.r_dot) << ',' << format_value(r.gamma) << ','
       << format_value(r.gamma_reg) << ',' << format_value(r.delta) << ','
       << format_value(r.delta_ref) << ',' << format_value(r.line_force) << ','
       << format_value(r.torque) << ',' << format_value(r.power) << ','
       << to_string(r.phase) << '\n';
  }
}

std::vector<LogRow> read_log_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty log file");
  if (line != kLogHeader) throw ParseError("unexpected log header", 1);

  std::vector<LogRow> rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 15) {
      throw ParseError("expected 15 columns, got " + std::to_string(fields.size()),
                       lineno);
    }
    auto num = [&](int i) {
      if (fields[i].empty()) return std::numeric_limits<double>::quiet_NaN();
      try {
        return std::stod(fields[i]);
      } catch (const std::exception&) {
        throw ParseError("bad number '" + fields[i] + "'", lineno);
      }
    };
    LogRow r;
    r.t = num(0);
    r.phi = num(1);
    r.theta = num(2);
    r.r = num(3);
    r.phi_dot = num(4);
    r.theta_dot = num(5);
    r.r_dot = num(6);
    r.gamma = num(7);
    r.gamma_reg = num(8);
    r.delta = num(9);
    r.delta_ref = num(10);
    r.line_force = num(11);
    r.torque = num(12);
    r.power = num(13);
    r.phase = phase_from_string(fields[14]);
    rows.push_back(r);
  }
  return rows;
}

std::vector<LogRow> load_log_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open log file '" + path + "'");
  return read_log_csv(in);
}

}  // namespace awe
