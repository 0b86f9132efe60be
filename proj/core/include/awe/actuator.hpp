#ifndef AWE_ACTUATOR_HPP
#define AWE_ACTUATOR_HPP

namespace awe {

// Closed-loop parameters of the steering actuation system, modeled as a
// second order system with unit DC gain.
struct ActuatorParams {
  double omega_cl = 78.0; // natural frequency [rad/s]
  double zeta_cl = 0.7;   // damping [-]
  double k_delta = 1.0;   // mechanical ratio, delta = k_delta * delta_m
  double position_limit = 0.4; // |delta_m| bound [m]
  double rate_limit = 10.0;    // |delta_m_dot| bound [m/s]
};

struct ActuatorState {
  double delta_m = 0.0;     // position [m]
  double delta_m_dot = 0.0; // velocity [m/s]
};

// RK4 update of the actuator dynamics with the reference held constant;
// position/rate saturation applied after integration.
ActuatorState actuator_step(const ActuatorState& act, const ActuatorParams& params,
                            double delta_ref, double dt);

inline double steering_output(const ActuatorState& act,
                              const ActuatorParams& params) {
  return params.k_delta * act.delta_m;
}

}  // namespace awe

#endif  // AWE_ACTUATOR_HPP
