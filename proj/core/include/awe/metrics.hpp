#ifndef AWE_METRICS_HPP
#define AWE_METRICS_HPP

#include <iosfwd>
#include <vector>

#include "awe/engine.hpp"

namespace awe {

struct CycleMetrics {
  int cycle = 0;
  double traction_energy = 0.0;   // [J], >= 0
  double retraction_energy = 0.0; // [J], <= 0
  double net_energy = 0.0;        // traction + retraction [J]
  double duration = 0.0;          // [s]
  double duty_cycle = 0.0;        // generating-time fraction, in (0, 1)
  double mean_theta_error = 0.0;  // mean |theta - theta_ref| during retraction [rad]
  double peak_force = 0.0;        // [N]
  double mean_traction_force = 0.0;   // over the figure-eight rows [N]
  double mean_retraction_force = 0.0; // over the retraction rows [N]
};

// Per completed cycle, bounded by consecutive entries into the figure-eight
// phase. Trapezoidal quadrature over the decimated log.
std::vector<CycleMetrics> compute_cycle_metrics(const std::vector<LogRow>& log,
                                                double theta_ref);

void write_metrics(std::ostream& os, const std::vector<CycleMetrics>& metrics);

}  // namespace awe

#endif  // AWE_METRICS_HPP
