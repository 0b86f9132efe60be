#include "awe/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "awe/control.hpp"

namespace awe {

namespace {

// Indices where a cycle starts: entries into the figure-eight phase.
std::vector<std::size_t> cycle_starts(const std::vector<LogRow>& log) {
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i < log.size(); ++i) {
    const bool entering = log[i].phase == Phase::TractionFig8 &&
                          (i == 0 || log[i - 1].phase != Phase::TractionFig8);
    // Target switches inside the figure-eight do not change the phase, so
    // only the transition-to-traction handover opens a new cycle.
    if (entering && (i == 0 || log[i - 1].phase == Phase::TransitionToTraction)) {
      starts.push_back(i);
    }
  }
  return starts;
}

}  // namespace

std::vector<CycleMetrics> compute_cycle_metrics(const std::vector<LogRow>& log,
                                                double theta_ref) {
  std::vector<CycleMetrics> metrics;
  const auto starts = cycle_starts(log);
  if (starts.size() < 2) return metrics;

  for (std::size_t c = 0; c + 1 < starts.size(); ++c) {
    const std::size_t b = starts[c];
    const std::size_t e = starts[c + 1];

    CycleMetrics m;
    m.cycle = static_cast<int>(c);
    m.duration = log[e].t - log[b].t;

    double generating_time = 0.0;
    for (std::size_t i = b; i < e; ++i) {
      const double dt = log[i + 1].t - log[i].t;
      const double inc = 0.5 * (log[i].power + log[i + 1].power) * dt;
      if (inc >= 0.0) m.traction_energy += inc;
      else m.retraction_energy += inc;
      if (log[i].power + log[i + 1].power > 0.0) generating_time += dt;
    }
    m.net_energy = m.traction_energy + m.retraction_energy;
    m.duty_cycle = m.duration > 0.0 ? generating_time / m.duration : 0.0;

    double theta_err_sum = 0.0;
    double traction_force_sum = 0.0;
    double retraction_force_sum = 0.0;
    std::size_t n_retr = 0;
    std::size_t n_trac = 0;
    for (std::size_t i = b; i < e; ++i) {
      m.peak_force = std::max(m.peak_force, log[i].line_force);
      if (log[i].phase == Phase::Retraction) {
        theta_err_sum += std::abs(log[i].theta - theta_ref);
        retraction_force_sum += log[i].line_force;
        ++n_retr;
      } else if (log[i].phase == Phase::TractionFig8) {
        traction_force_sum += log[i].line_force;
        ++n_trac;
      }
    }
    if (n_retr > 0) {
      m.mean_theta_error = theta_err_sum / static_cast<double>(n_retr);
      m.mean_retraction_force = retraction_force_sum / static_cast<double>(n_retr);
    }
    if (n_trac > 0) {
      m.mean_traction_force = traction_force_sum / static_cast<double>(n_trac);
    }
    metrics.push_back(m);
  }
  return metrics;
}

void write_metrics(std::ostream& os, const std::vector<CycleMetrics>& metrics) {
  os << "cycle,traction_energy,retraction_energy,net_energy,duration,duty_cycle,"
        "mean_theta_error,peak_force,mean_traction_force,mean_retraction_force\n";
  for (const CycleMetrics& m : metrics) {
    os << m.cycle << ',' << m.traction_energy << ',' << m.retraction_energy << ','
       << m.net_energy << ',' << m.duration << ',' << m.duty_cycle << ','
       << m.mean_theta_error << ',' << m.peak_force << ','
       << m.mean_traction_force << ',' << m.mean_retraction_force << '\n';
  }
}

}  // namespace awe
