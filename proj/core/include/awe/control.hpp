#ifndef AWE_CONTROL_HPP
#define AWE_CONTROL_HPP

#include "awe/actuator.hpp"
#include "awe/dynamics.hpp"
#include "awe/geometry.hpp"
#include "awe/params.hpp"

namespace awe {

enum class Phase {
  TractionFig8,
  TransitionToBorder,
  Retraction,
  TransitionToTraction,
};

enum class RetractionLaw { RegularizedGamma, ElevationSF };

const char* to_string(Phase phase);
const char* to_string(RetractionLaw law);

struct ControllerConfig {
  double kc_traction = 0.056;   // [m/rad]
  double kc_retraction = 0.28;  // [m/rad]
  double k_theta = -2.5;        // [-], < 0
  double k1_sf = -1.4;          // [m/rad]
  double k2_sf = -4.6;          // [m*s/rad]
  double theta_ref = 1.0;       // [rad]
  double gamma_min = 0.9707963267948966; // pi/2 - 0.6 [rad]
  double gamma_max = 2.1707963267948966; // pi/2 + 0.6 [rad]
  double regularization_c = 0.05;        // [rad/s]
  // Figure-eight geometry: targets at phi_w +- target_phi_offset.
  double target_phi_offset = 0.35; // [rad]
  double target_theta = 0.35;      // [rad]
  WindowSide retraction_side = WindowSide::Left;
  // The transition ends once the wing is within this gap of the border azimuth.
  double retraction_entry_dphi = 0.22; // [rad]
  double downwind_tolerance = 0.4; // phi sector for traction re-entry [rad]
};

struct WinchConfig {
  double drum_radius = 0.2;        // r_d [m]
  double torque_min = 16.0;        // lower bound, keeps line tension [N*m]
  double torque_max = 600.0;       // mechanical overload bound [N*m]
  double retraction_torque = 0.0;  // constant reel-in torque; <= 0 -> auto
  double retraction_reel_in = 2.5; // target reel-in speed for auto sizing [m/s]
  double hold_gain = 2000.0;       // r_dot servo stiffness while holding r [N*s/m]
  double r_min = 50.0;             // [m]
  double r_max = 150.0;            // [m]
};

// --- feedback laws ---

// Proportional velocity-angle controller (angles wrapped).
double velocity_angle_control(double gamma_r, double gamma_r_ref, double k_c);

// Saturated affine reference law for the retraction phase, left window side.
double retraction_gamma_reference(double theta, const ControllerConfig& cfg);

// State feedback on the elevation errors, z = -(k1*dtheta + k2*dtheta_dot).
double elevation_state_feedback(double dtheta, double dtheta_dot, double k1,
                                double k2);

// Heading reference pointing the velocity at a (phi, theta) target point.
double gamma_ref_to_target(const KinematicState& state, double target_phi,
                           double target_theta);

// Torque tracking the optimal reel-out speed, T = 4*C_F*r_d*r_dot^2, clamped.
double reeling_torque_traction(double traction_coeff, double drum_radius,
                               double r_dot_measured, double torque_min,
                               double torque_max);

// Constant retraction torque sized so the border force balance at
// (phi_w +- pi/2, theta_ref) holds at the requested reel-in speed.
double size_retraction_torque(const WinchConfig& winch,
                              const ControllerConfig& cfg, const WindField& wind,
                              const SystemParams& params, double r);

// --- power-cycle supervisor ---

struct SupervisorOutput {
  double delta_ref = 0.0;
  double torque = 0.0;
  double gamma_r_ref = 0.0; // active heading reference (traction/gamma law)
  Phase phase = Phase::TractionFig8;
};

// State machine dispatching the phase control laws along the cycle graph
// TractionFig8 -> TransitionToBorder -> Retraction -> TransitionToTraction.
class Supervisor {
public:
  Supervisor(ControllerConfig cfg, WinchConfig winch, RetractionLaw law,
             SystemParams params);

  SupervisorOutput step(const KinematicState& state, const WindField& wind);

  Phase phase() const { return phase_; }
  int cycles_completed() const { return cycles_completed_; }
  int active_target() const { return active_target_; }

private:
  void update_phase(const KinematicState& state, const WindField& wind);
  double retraction_delta_ref(const KinematicState& state, const WindField& wind,
                              double side, double* gamma_ref_out);
  double retraction_torque(const KinematicState& state) const;
  double guidance_delta_ref(const KinematicState& state, const WindField& wind,
                            double target_phi, double target_theta, double k_c,
                            double* gamma_ref_out);
  double regularized_angle_held(const KinematicState& state, const WindField& wind);
  double gravity_turn_feedforward(const KinematicState& state,
                                  const WindField& wind);

  ControllerConfig cfg_;
  WinchConfig winch_;
  RetractionLaw law_;
  SystemParams params_;
  double traction_coeff_;
  double retraction_torque_;

  Phase phase_ = Phase::TractionFig8;
  int active_target_ = +1; // +1: east target, -1: west target
  int cycles_completed_ = 0;
  double last_gamma_r_ = 0.0;
  bool has_last_gamma_r_ = false;
};

}  // namespace awe

#endif  // AWE_CONTROL_HPP
