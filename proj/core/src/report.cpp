#include "awe/report.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "awe/errors.hpp"
#include "awe/metrics.hpp"
#include "awe/reduced_models.hpp"

namespace awe {

namespace {

double retraction_tracking_error(const std::vector<LogRow>& log, double theta_ref) {
  double sum = 0.0;
  std::size_t n = 0;
  for (const LogRow& row : log) {
    if (row.phase == Phase::Retraction) {
      sum += std::abs(row.theta - theta_ref);
      ++n;
    }
  }
  if (n == 0) throw SimulationError("run never reached the retraction phase");
  return sum / static_cast<double>(n);
}

double run_one_retraction(Scenario sc, RetractionLaw law) {
  sc.retraction_law = law;
  RunOptions opts;
  opts.stop_after_cycles = 1;
  const RunResult res = run_simulation(sc, opts);
  if (res.cycles_completed < 1) {
    throw SimulationError("cycle did not complete within the scenario duration");
  }
  return retraction_tracking_error(res.log, sc.controller.theta_ref);
}

// Wind component along the tether direction, from the logged position.
double radial_wind(const LogRow& row, const WindField& wind) {
  const double altitude = row.r * std::sin(row.theta);
  const double w = wind.speed_at(altitude);
  return w * std::cos(row.theta) * std::cos(row.phi - wind.phi_w);
}

}  // namespace

std::vector<double> default_sweep_values(SweepAxis axis) {
  if (axis == SweepAxis::ReelIn) return {1.5, 2.0, 2.5, 3.0, 3.5};
  return {4.0, 5.0, 6.0};
}

std::vector<TrackingPoint> tracking_error_sweep(const Scenario& base,
                                                SweepAxis axis,
                                                const std::vector<double>& values) {
  std::vector<TrackingPoint> points;
  points.reserve(values.size());
  for (double v : values) {
    Scenario sc = base;
    if (axis == SweepAxis::ReelIn) {
      sc.winch.retraction_reel_in = v;
      sc.winch.retraction_torque = 0.0; // re-size for the new target speed
    } else {
      sc.wind.speed = v;
    }

    TrackingPoint p;
    p.value = v;
    try {
      p.error_gamma = run_one_retraction(sc, RetractionLaw::RegularizedGamma);
      p.ok_gamma = true;
    } catch (const std::exception& e) {
      p.message = std::string("regularized_gamma: ") + e.what();
    }
    try {
      p.error_elevation = run_one_retraction(sc, RetractionLaw::ElevationSF);
      p.ok_elevation = true;
    } catch (const std::exception& e) {
      if (!p.message.empty()) p.message += "; ";
      p.message += std::string("elevation_sf: ") + e.what();
    }
    points.push_back(p);
  }
  return points;
}

void write_tracking_csv(std::ostream& os, const std::vector<TrackingPoint>& points) {
  os << "value,error_regularized_gamma,error_elevation_sf,ok\n";
  for (const TrackingPoint& p : points) {
    os << p.value << ',';
    if (p.ok_gamma) os << p.error_gamma;
    os << ',';
    if (p.ok_elevation) os << p.error_elevation;
    os << ',' << (p.ok_gamma && p.ok_elevation ? 1 : 0) << '\n';
  }
}

ComparisonSummary model_comparison_report(const std::vector<LogRow>& log,
                                          const Scenario& scenario,
                                          std::ostream& os) {
  const WindField wind = scenario.wind.field();
  ComparisonSummary s;

  os << "t,phase,force_sim,force_model,power_sim,power_model,rel_error\n";
  for (const LogRow& row : log) {
    const double wr = radial_wind(row, wind);
    const double f_model = traction_force_model(wr, row.r_dot, scenario.params.wing,
                                                scenario.params.env);
    const double p_model = f_model * row.r_dot;

    double rel = std::numeric_limits<double>::quiet_NaN();
    if (row.line_force > 1.0) {
      rel = (f_model - row.line_force) / row.line_force;
      if (row.phase == Phase::TractionFig8) {
        s.traction_bias += rel;
        s.traction_mean_abs += std::abs(rel);
        ++s.traction_rows;
      } else if (row.phase == Phase::Retraction) {
        s.retraction_bias += rel;
        s.retraction_mean_abs += std::abs(rel);
        ++s.retraction_rows;
      }
    }

    os << row.t << ',' << to_string(row.phase) << ',' << row.line_force << ','
       << f_model << ',' << row.power << ',' << p_model << ',';
    if (std::isfinite(rel)) os << rel;
    os << '\n';
  }

  if (s.traction_rows > 0) {
    s.traction_bias /= static_cast<double>(s.traction_rows);
    s.traction_mean_abs /= static_cast<double>(s.traction_rows);
  }
  if (s.retraction_rows > 0) {
    s.retraction_bias /= static_cast<double>(s.retraction_rows);
    s.retraction_mean_abs /= static_cast<double>(s.retraction_rows);
  }
  return s;
}

void write_summary(std::ostream& os, const ComparisonSummary& s) {
  os << "traction:   rows=" << s.traction_rows << " bias=" << s.traction_bias
     << " mean_abs_rel_error=" << s.traction_mean_abs << '\n';
  os << "retraction: rows=" << s.retraction_rows << " bias=" << s.retraction_bias
     << " mean_abs_rel_error=" << s.retraction_mean_abs << '\n';
}

std::vector<std::string> emit_figures(const std::vector<LogRow>& log,
                                      const std::string& out_dir,
                                      const std::string& prefix) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);

  std::vector<std::string> written;
  auto open = [&](const std::string& name) {
    const std::string path = (fs::path(out_dir) / (prefix + "_" + name)).string();
    written.push_back(path);
    std::ofstream os(path);
    if (!os) throw SimulationError("cannot write '" + path + "'");
    return os;
  };

  {
    auto os = open("trajectory.csv");
    os << "t,x,y,z\n";
    for (const LogRow& row : log) {
      KinematicState s;
      s.phi = row.phi;
      s.theta = row.theta;
      s.r = row.r;
      const GroundVec p = wing_position(s);
      os << row.t << ',' << p.x << ',' << p.y << ',' << p.z << '\n';
    }
  }
  {
    auto os = open("angles.csv");
    os << "t,phi,theta\n";
    for (const LogRow& row : log) {
      os << row.t << ',' << row.phi << ',' << row.theta << '\n';
    }
  }
  {
    auto os = open("gamma.csv");
    os << "t,gamma,gamma_reg\n";
    for (const LogRow& row : log) {
      os << row.t << ',';
      if (std::isfinite(row.gamma)) os << row.gamma;
      os << ',' << row.gamma_reg << '\n';
    }
  }
  {
    auto os = open("power.csv");
    os << "t,F_c,T_m,power,phase\n";
    for (const LogRow& row : log) {
      os << row.t << ',' << row.line_force << ',' << row.torque << ','
         << row.power << ',' << to_string(row.phase) << '\n';
    }
  }
  return written;
}

}  // namespace awe
