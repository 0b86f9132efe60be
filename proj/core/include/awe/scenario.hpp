#ifndef AWE_SCENARIO_HPP
#define AWE_SCENARIO_HPP

#include <iosfwd>
#include <string>

#include "awe/actuator.hpp"
#include "awe/control.hpp"
#include "awe/geometry.hpp"
#include "awe/params.hpp"

namespace awe {

enum class ShearModel { None, PowerLaw };

struct WindConfig {
  double speed = 5.0;     // W0 [m/s]
  double direction = 0.0; // phi_w [rad]
  ShearModel shear = ShearModel::None;
  double shear_exponent = 0.14;
  double shear_reference_height = 5.0; // [m]
  // Seeded first-order filtered noise on W0, off by default.
  bool gust_enabled = false;
  double gust_intensity = 0.0;   // std deviation of the speed perturbation [m/s]
  double gust_bandwidth = 0.1;   // filter cutoff [rad/s]
  unsigned int seed = 1;

  WindField field() const; // without the gust perturbation
};

struct SimConfig {
  double duration = 600.0; // [s]
  double dt = 1e-3;        // [s]
  int decimation = 10;     // log every n-th step
  double initial_phi = 0.0;
  double initial_theta = 0.6;
  double initial_r = 60.0;
  double initial_phi_dot = 0.0;
  double initial_theta_dot = 0.05;
  double initial_r_dot = 0.0;
};

// Complete description of one simulation run. An empty file parses to the
// default (Table-style) parameter set.
struct Scenario {
  SystemParams params;
  WindConfig wind;
  ActuatorParams actuator;
  ControllerConfig controller;
  WinchConfig winch;
  RetractionLaw retraction_law = RetractionLaw::ElevationSF;
  SimConfig sim;

  KinematicState initial_state() const;
};

// Strict nested key-value format: [section] headers, key = value lines,
// '#' comments. Unknown sections/keys raise ParseError; invariant
// violations raise ValidationError.
Scenario parse_scenario(std::istream& in);
Scenario load_scenario(const std::string& path);

void validate(const Scenario& scenario);

}  // namespace awe

#endif  // AWE_SCENARIO_HPP
