#ifndef AWE_REDUCED_MODELS_HPP
#define AWE_REDUCED_MODELS_HPP

#include "awe/geometry.hpp"
#include "awe/params.hpp"

namespace awe {

// Control-oriented turn-rate law: gamma_dot ~= K * delta + T.
double turn_rate_gain(const KinematicState& state, const WindField& wind,
                      const WingParams& wing, const EnvParams& env);
double turn_rate_bias(const KinematicState& state, const WindField& wind,
                      const EnvParams& env, double epsilon = 1e-9);

// Steering gain of the elevation dynamics at the window border,
// theta_ddot = -C * delta - (g cos(theta) + 2 theta_dot r_dot) / r.
// Uses the effective (wing + lumped tether) mass.
double elevation_gain(const KinematicState& state, const WindField& wind,
                      const WingParams& wing, const TetherParams& tether,
                      const EnvParams& env);

double elevation_accel(const KinematicState& state, double delta,
                       double gain, const EnvParams& env);

// Elevation dynamics obtained from the turn-rate law instead; same structure,
// no reeling term.
double simplified_theta_accel(const KinematicState& state, double delta,
                              const WindField& wind, const WingParams& wing,
                              const TetherParams& tether, const EnvParams& env);

// Crosswind traction-force model: F_c = C_F * (W_r - r_dot)^2.
double traction_coefficient(const WingParams& wing, const EnvParams& env);
double traction_force_model(double wind_along_tether, double r_dot,
                            const WingParams& wing, const EnvParams& env);

// Positive while reeling out under tension (generation).
double mechanical_power(double line_force, double r_dot);

}  // namespace awe

#endif  // AWE_REDUCED_MODELS_HPP
