#ifndef AWE_DYNAMICS_HPP
#define AWE_DYNAMICS_HPP

#include "awe/geometry.hpp"
#include "awe/params.hpp"

namespace awe {

// Aerodynamic attitude angles of the roll-steered wing.
struct AeroAngles {
  double psi = 0.0;         // roll command [rad]
  double eta = 0.0;         // [rad]
  double xi = 0.0;          // heading in the tangent plane [rad]
  double delta_alpha = 0.0; // apparent-wind angle below the tangent plane [rad]
};

struct ForceBreakdown {
  LocalVec gravity;
  LocalVec aero;
  double line_force = 0.0; // F_c >= 0, acting along +e_D
  LocalVec total;
};

struct StateDerivative {
  double phi_dot = 0.0;
  double theta_dot = 0.0;
  double r_dot = 0.0;
  double phi_ddot = 0.0;
  double theta_ddot = 0.0;
  double r_ddot = 0.0;
};

// Wing mass plus the lumped tether mass.
double effective_mass(const WingParams& wing, const TetherParams& tether,
                      double r);

// C_D,eq = C_L / E_eq. E_eq is a direct input; tether drag is understood to
// be folded into it already.
double equivalent_drag_coefficient(const WingParams& wing);

// Drag-area increment of the tether relative to the wing area, for sizing
// E_eq from wing-alone aerodynamics: one quarter of the projected tether
// area with drag coefficient cd_t, referred to A.
double tether_drag_increment(const WingParams& wing, const TetherParams& tether,
                             double r, double cd_tether = 1.2);

// Below this apparent wind speed the aero model is treated as stalled; the
// engine reports it on its warning channel.
constexpr double kStallApparentWind = 0.5; // [m/s]

// theta guard band: Eq.-of-motion divides by cos(theta).
constexpr double kThetaGuard = 1e-3; // [rad]

AeroAngles aero_angles(const KinematicState& state, const WindField& wind,
                       double delta, const WingParams& wing);

// Lift along e_L and equivalent drag along e_W, in the L frame.
LocalVec aero_force(const KinematicState& state, const WindField& wind,
                    double delta, const WingParams& wing, const EnvParams& env);

ForceBreakdown compute_forces(const KinematicState& state, const WindField& wind,
                              double delta, double line_force,
                              const SystemParams& params);

// Point-mass equations of motion in the local frame.
StateDerivative state_derivative(const KinematicState& state,
                                 const WindField& wind, double delta,
                                 double line_force, const SystemParams& params);

// One explicit fixed-step RK4 update with the inputs held constant.
KinematicState integrate_step(const KinematicState& state, const WindField& wind,
                              double delta, double line_force,
                              const SystemParams& params, double dt);

enum class WindowSide { Left, Right };

struct Equilibrium {
  KinematicState state;
  double delta = 0.0;      // steering input holding the equilibrium
  double line_force = 0.0; // F_c balancing r_ddot = 0
  double residual = 0.0;   // norm of the remaining tangent-plane accelerations
};

// Static angular position at constant steering input and constant tether
// length, found by damped Newton on (phi, theta). Throws NoConvergence /
// NoEquilibrium.
Equilibrium find_equilibrium(double delta, const WindField& wind,
                             const SystemParams& params, double r,
                             WindowSide side);

// Inverse query: the steering input for which the window-border equilibrium
// sits at the requested elevation.
Equilibrium find_equilibrium_for_theta(double theta_target, const WindField& wind,
                                       const SystemParams& params, double r,
                                       WindowSide side);

// Second route to the same point: forward simulation at constant delta and
// locked tether length until the state settles.
Equilibrium simulate_to_equilibrium(double delta, const WindField& wind,
                                    const SystemParams& params, double r,
                                    WindowSide side, double horizon = 120.0,
                                    double dt = 1e-3);

}  // namespace awe

#endif  // AWE_DYNAMICS_HPP
