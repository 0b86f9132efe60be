#ifndef AWE_REPORT_HPP
#define AWE_REPORT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "awe/engine.hpp"
#include "awe/scenario.hpp"

namespace awe {

enum class SweepAxis { ReelIn, Wind };

struct TrackingPoint {
  double value = 0.0;            // swept quantity (reel-in or wind speed)
  double error_gamma = 0.0;      // mean |theta - theta_ref| during retraction
  double error_elevation = 0.0;
  bool ok_gamma = false;         // per-point failures keep the sweep going
  bool ok_elevation = false;
  std::string message;           // failure description when not ok
};

std::vector<double> default_sweep_values(SweepAxis axis);

// Runs one full cycle per grid point with each retraction law and reports
// the retraction-phase elevation tracking error.
std::vector<TrackingPoint> tracking_error_sweep(const Scenario& base,
                                                SweepAxis axis,
                                                const std::vector<double>& values);

void write_tracking_csv(std::ostream& os, const std::vector<TrackingPoint>& points);

struct ComparisonSummary {
  // Signed relative model error mean((F_model - F_sim)/F_sim) and its
  // magnitude counterpart, split by phase.
  double traction_bias = 0.0;
  double traction_mean_abs = 0.0;
  double retraction_bias = 0.0;
  double retraction_mean_abs = 0.0;
  std::size_t traction_rows = 0;
  std::size_t retraction_rows = 0;
};

// Simulated line force/power vs the quasi-steady crosswind force model,
// row by row; the returned summary aggregates the relative error per phase.
ComparisonSummary model_comparison_report(const std::vector<LogRow>& log,
                                          const Scenario& scenario,
                                          std::ostream& os);

void write_summary(std::ostream& os, const ComparisonSummary& s);

// Plot-data CSVs (trajectory, phi/theta traces, gamma traces, force/power),
// one file per figure under out_dir. Returns the written paths.
std::vector<std::string> emit_figures(const std::vector<LogRow>& log,
                                      const std::string& out_dir,
                                      const std::string& prefix = "fig");

}  // namespace awe

#endif  // AWE_REPORT_HPP
