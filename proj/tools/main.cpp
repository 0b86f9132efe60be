// Command-line front end: simulation runs, tracking-error sweeps, robust
// stability queries, model-comparison reports, and plot-data export.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "awe/engine.hpp"
#include "awe/errors.hpp"
#include "awe/metrics.hpp"
#include "awe/report.hpp"
#include "awe/scenario.hpp"
#include "awe/stability.hpp"

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNegative = 2;

fs::path output_dir(const std::string& cli_value) {
  if (!cli_value.empty()) return cli_value;
  if (const char* env = std::getenv("AWE_OUTPUT_DIR")) return env;
  return ".";
}

std::ofstream open_out(const fs::path& dir, const std::string& name) {
  fs::create_directories(dir);
  const fs::path path = dir / name;
  std::ofstream os(path);
  if (!os) throw awe::ValidationError("cannot write '" + path.string() + "'");
  std::cout << "wrote " << path.string() << "\n";
  return os;
}

awe::Scenario load_or_default(const std::string& path) {
  if (path.empty()) return awe::Scenario{};
  return awe::load_scenario(path);
}

int cmd_run(const std::string& scenario_path, const fs::path& out) {
  const awe::Scenario sc = awe::load_scenario(scenario_path);
  const awe::RunResult res = awe::run_simulation(sc);

  {
    auto os = open_out(out, "run_log.csv");
    awe::write_log_csv(os, res.log);
  }
  const auto metrics = awe::compute_cycle_metrics(res.log, sc.controller.theta_ref);
  {
    auto os = open_out(out, "metrics.csv");
    awe::write_metrics(os, metrics);
  }

  std::cout << "cycles completed: " << res.cycles_completed << "\n";
  for (const auto& m : metrics) {
    std::cout << "cycle " << m.cycle << ": net " << m.net_energy << " J over "
              << m.duration << " s, duty " << m.duty_cycle
              << ", retraction tracking error " << m.mean_theta_error << " rad\n";
  }
  for (const auto& w : res.warnings) std::cout << "warning: " << w << "\n";

  if (res.cycles_completed == 0) {
    std::cout << "no cycle completed\n";
    return kExitNegative;
  }
  return kExitOk;
}

int cmd_sweep(const std::string& scenario_path, const std::string& axis_name,
              const fs::path& out) {
  const awe::SweepAxis axis =
      axis_name == "reelin" ? awe::SweepAxis::ReelIn : awe::SweepAxis::Wind;
  const awe::Scenario sc = awe::load_scenario(scenario_path);
  const auto points =
      awe::tracking_error_sweep(sc, axis, awe::default_sweep_values(axis));

  auto os = open_out(out, "tracking_sweep.csv");
  awe::write_tracking_csv(os, points);

  bool any_ok = false;
  for (const auto& p : points) {
    std::cout << axis_name << "=" << p.value;
    if (p.ok_gamma) std::cout << " gamma_err=" << p.error_gamma;
    if (p.ok_elevation) std::cout << " sf_err=" << p.error_elevation;
    if (!p.message.empty()) std::cout << " [" << p.message << "]";
    std::cout << "\n";
    any_ok = any_ok || (p.ok_gamma && p.ok_elevation);
  }
  return any_ok ? kExitOk : kExitNegative;
}

int cmd_stability(const std::string& design, bool sweep, const fs::path& out) {
  const awe::ActuatorParams act;
  const awe::ControllerConfig ctl;

  if (sweep) {
    std::vector<double> g1, g2;
    awe::ProblemBuilder builder;
    if (design == "gamma") {
      const auto box = awe::default_gamma_box();
      for (int i = 0; i < 8; ++i) g1.push_back(0.05 + 0.07 * i);  // K_c
      for (int i = 0; i < 8; ++i) g2.push_back(-4.0 + 0.5 * i);   // K_theta
      builder = [box, act](double kc, double kt) {
        return awe::gamma_design_vertices(box, kc, kt, act);
      };
    } else {
      const auto box = awe::default_elevation_box();
      for (int i = 0; i < 8; ++i) g1.push_back(-3.0 + 0.4 * i);   // k1
      for (int i = 0; i < 8; ++i) g2.push_back(-8.0 + 1.0 * i);   // k2
      builder = [box, act](double k1, double k2) {
        return awe::elevation_design_vertices(box, k1, k2, act, 9.81);
      };
    }
    const auto cells = awe::stability_sweep(g1, g2, builder);
    auto os = open_out(out, design + "_stability_sweep.csv");
    awe::write_sweep_csv(os, cells);
    return kExitOk;
  }

  std::vector<Eigen::Matrix4d> vertices;
  if (design == "gamma") {
    vertices = awe::gamma_design_vertices(awe::default_gamma_box(),
                                          ctl.kc_retraction, ctl.k_theta, act);
  } else {
    vertices = awe::elevation_design_vertices(awe::default_elevation_box(),
                                              ctl.k1_sf, ctl.k2_sf, act, 9.81);
  }
  const auto res = awe::find_common_lyapunov(vertices);
  switch (res.status) {
    case awe::LyapunovStatus::Found: {
      const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(res.certificate.P);
      std::cout << "certificate found after " << res.iterations << " iterations\n";
      std::cout << "P eigenvalues:" ;
      for (int i = 0; i < 4; ++i) std::cout << " " << es.eigenvalues()(i);
      std::cout << "\nmargin: " << res.certificate.margin << "\n";
      return kExitOk;
    }
    case awe::LyapunovStatus::NonHurwitzVertex:
      std::cout << "vertex " << res.bad_vertex << " is not Hurwitz\n";
      return kExitNegative;
    case awe::LyapunovStatus::Infeasible:
      std::cout << "no certificate found within the iteration budget\n";
      return kExitNegative;
  }
  return kExitNegative;
}

int cmd_report(const std::string& log_path, const std::string& scenario_path,
               const fs::path& out) {
  const auto log = awe::load_log_csv(log_path);
  const awe::Scenario sc = load_or_default(scenario_path);
  awe::ComparisonSummary summary;
  {
    auto os = open_out(out, "model_comparison.csv");
    summary = awe::model_comparison_report(log, sc, os);
  }
  awe::write_summary(std::cout, summary);
  return kExitOk;
}

int cmd_figures(const std::string& log_path, const fs::path& out) {
  const auto log = awe::load_log_csv(log_path);
  for (const auto& path : awe::emit_figures(log, out.string())) {
    std::cout << "wrote " << path << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Airborne wind energy power-cycle simulator and analysis tool"};
  app.require_subcommand(1);

  std::string out_dir_flag;
  app.add_option("-o,--output-dir", out_dir_flag,
                 "Output directory (overrides AWE_OUTPUT_DIR)");

  std::string scenario_path, axis = "reelin", design = "gamma";
  std::string log_path, report_scenario;
  bool do_sweep = false;

  auto* run = app.add_subcommand("run", "Simulate a scenario");
  run->add_option("scenario", scenario_path, "Scenario file")->required();

  auto* sweep = app.add_subcommand("sweep", "Retraction tracking-error sweep");
  sweep->add_option("--axis", axis, "Sweep axis")
      ->check(CLI::IsMember({"reelin", "wind"}))
      ->required();
  sweep->add_option("scenario", scenario_path, "Base scenario file")->required();

  auto* stability = app.add_subcommand("stability", "Robust stability analysis");
  stability->add_option("--design", design, "Controller design")
      ->check(CLI::IsMember({"gamma", "elevation"}))
      ->required();
  stability->add_flag("--sweep", do_sweep, "Sweep the gain plane");

  auto* report = app.add_subcommand("report", "Model-vs-simulation comparison");
  report->add_option("log", log_path, "Run log CSV")->required();
  report->add_option("--scenario", report_scenario,
                     "Scenario the log was produced with (defaults otherwise)");

  auto* figures = app.add_subcommand("figures", "Emit plot-data CSV files");
  figures->add_option("log", log_path, "Run log CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const fs::path out = output_dir(out_dir_flag);
  try {
    if (run->parsed()) return cmd_run(scenario_path, out);
    if (sweep->parsed()) return cmd_sweep(scenario_path, axis, out);
    if (stability->parsed()) return cmd_stability(design, do_sweep, out);
    if (report->parsed()) return cmd_report(log_path, report_scenario, out);
    if (figures->parsed()) return cmd_figures(log_path, out);
  } catch (const awe::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const awe::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNegative;
  }
  return kExitUsage;
}
