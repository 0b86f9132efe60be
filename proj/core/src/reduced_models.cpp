#include "awe/reduced_models.hpp"

#include <cmath>

#include "awe/dynamics.hpp"
#include "awe/errors.hpp"

namespace awe {

double turn_rate_gain(const KinematicState& state, const WindField& wind,
                      const WingParams& wing, const EnvParams& env) {
  const double wa = apparent_wind(state, wind).norm();
  const double e2 = wing.eq_efficiency * wing.eq_efficiency;
  const double t = 1.0 + 1.0 / e2;
  return env.air_density * wing.lift_coeff * wing.area * wa /
         (2.0 * wing.mass * wing.span) * t * t;
}

double turn_rate_bias(const KinematicState& state, const WindField& wind,
                      const EnvParams& env, double epsilon) {
  const double wa = apparent_wind(state, wind).norm();
  if (wa < epsilon) throw DomainError("apparent wind too small for turn-rate bias");
  const double gamma = velocity_angle(state);
  return env.gravity * std::cos(state.theta) * std::sin(gamma) / wa +
         std::sin(state.theta) * state.phi_dot;
}

double elevation_gain(const KinematicState& state, const WindField& wind,
                      const WingParams& wing, const TetherParams& tether,
                      const EnvParams& env) {
  const double m = effective_mass(wing, tether, state.r);
  const double wa = apparent_wind(state, wind).norm();
  const double t = 1.0 + 1.0 / (wing.eq_efficiency * wing.eq_efficiency);
  // phi measured from the wind direction.
  const double sphi = std::sin(state.phi - wind.phi_w);
  return env.air_density * wing.area * wing.lift_coeff /
         (2.0 * state.r * m * wing.span) * t * wind.w0 * sphi * wa;
}

double elevation_accel(const KinematicState& state, double delta, double gain,
                       const EnvParams& env) {
  return -gain * delta -
         (env.gravity * std::cos(state.theta) +
          2.0 * state.theta_dot * state.r_dot) /
             state.r;
}

double simplified_theta_accel(const KinematicState& state, double delta,
                              const WindField& wind, const WingParams& wing,
                              const TetherParams& tether, const EnvParams& env) {
  const double m = effective_mass(wing, tether, state.r);
  const double wa = apparent_wind(state, wind).norm();
  const double t = 1.0 + 1.0 / (wing.eq_efficiency * wing.eq_efficiency);
  const double gain = env.air_density * wing.area * wing.lift_coeff /
                      (2.0 * state.r * m * wing.span) * t * wa * wa;
  return -gain * delta - env.gravity * std::cos(state.theta) / state.r;
}

double traction_coefficient(const WingParams& wing, const EnvParams& env) {
  const double e2 = wing.eq_efficiency * wing.eq_efficiency;
  return 0.5 * env.air_density * wing.area * wing.lift_coeff * e2 *
         std::pow(1.0 + 1.0 / e2, 1.5);
}

double traction_force_model(double wind_along_tether, double r_dot,
                            const WingParams& wing, const EnvParams& env) {
  const double wr = wind_along_tether - r_dot;
  return traction_coefficient(wing, env) * wr * wr;
}

double mechanical_power(double line_force, double r_dot) {
  return line_force * r_dot;
}

}  // namespace awe
