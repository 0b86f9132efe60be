#include "awe/dynamics.hpp"

#include <cmath>

#include "awe/errors.hpp"

namespace awe {

namespace {
constexpr double kPi = 3.14159265358979323846;

void check_theta(double theta) {
  if (std::abs(theta) > kPi / 2.0 - kThetaGuard) {
    throw DomainError("theta out of admissible range (ground/zenith guard)");
  }
}
}  // namespace

double effective_mass(const WingParams& wing, const TetherParams& tether,
                      double r) {
  const double tether_mass =
      tether.density * kPi * tether.diameter * tether.diameter / 4.0 * r;
  return wing.mass + tether.mass_lumping * tether_mass;
}

double equivalent_drag_coefficient(const WingParams& wing) {
  return wing.lift_coeff / wing.eq_efficiency;
}

double tether_drag_increment(const WingParams& wing, const TetherParams& tether,
                             double r, double cd_tether) {
  // Quarter of the tether's projected area, referred to the wing area.
  return cd_tether * tether.diameter * r / (4.0 * wing.area);
}

AeroAngles aero_angles(const KinematicState& state, const WindField& wind,
                       double delta, const WingParams& wing) {
  if (std::abs(delta) >= wing.span) {
    throw RollOutOfRange("steering input exceeds wing span");
  }
  AeroAngles a;
  a.psi = std::asin(delta / wing.span);

  const LocalVec wa = apparent_wind(state, wind);
  const double wnorm = wa.norm();
  // Angle between the apparent wind and the tangent plane; positive when
  // the flow pushes the wing outward along the tether.
  a.delta_alpha =
      wnorm > 0.0 ? std::asin(std::clamp(-wa.z / wnorm, -1.0, 1.0)) : 0.0;
  // Near a purely radial inflow the wind-alignment model degenerates; the
  // induced sideslip is clamped instead of blowing up.
  const double s =
      std::clamp(std::tan(a.delta_alpha) * std::tan(a.psi), -0.999, 0.999);
  a.eta = std::asin(s);

  a.xi = std::atan2(-wa.y, -wa.x);
  return a;
}

LocalVec aero_force(const KinematicState& state, const WindField& wind,
                    double delta, const WingParams& wing, const EnvParams& env) {
  const AeroAngles a = aero_angles(state, wind, delta, wing);
  const LocalVec wa = apparent_wind(state, wind);
  const double wa2 = wa.dot(wa);

  const double lift = 0.5 * env.air_density * wing.area * wing.lift_coeff * wa2;
  const double drag =
      0.5 * env.air_density * wing.area * equivalent_drag_coefficient(wing) * wa2;

  const double cxi = std::cos(a.xi), sxi = std::sin(a.xi);
  const double cpsi = std::cos(a.psi), spsi = std::sin(a.psi);
  const double ceta = std::cos(a.eta), seta = std::sin(a.eta);
  const double cda = std::cos(a.delta_alpha), sda = std::sin(a.delta_alpha);

  // Lift and drag directions before the heading rotation about e_D.
  const double el0[3] = {cpsi * ceta * sda, cpsi * seta * sda + spsi * cda,
                         -cpsi * ceta * cda};
  const double ew0[3] = {-cda, 0.0, -sda};

  const LocalVec e_l{cxi * el0[0] - sxi * el0[1], sxi * el0[0] + cxi * el0[1],
                     el0[2]};
  const LocalVec e_w{cxi * ew0[0] - sxi * ew0[1], sxi * ew0[0] + cxi * ew0[1],
                     ew0[2]};

  return lift * e_l + drag * e_w;
}

ForceBreakdown compute_forces(const KinematicState& state, const WindField& wind,
                              double delta, double line_force,
                              const SystemParams& params) {
  const double m = effective_mass(params.wing, params.tether, state.r);
  const double g = params.env.gravity;

  ForceBreakdown f;
  f.gravity = {-m * g * std::cos(state.theta), 0.0, m * g * std::sin(state.theta)};
  f.aero = aero_force(state, wind, delta, params.wing, params.env);
  f.line_force = line_force;
  f.total = f.gravity + f.aero + LocalVec{0.0, 0.0, line_force};
  return f;
}

StateDerivative state_derivative(const KinematicState& state,
                                 const WindField& wind, double delta,
                                 double line_force, const SystemParams& params) {
  check_theta(state.theta);
  if (state.r <= 0.0) throw DomainError("tether length must be positive");

  const ForceBreakdown f = compute_forces(state, wind, delta, line_force, params);
  const double m = effective_mass(params.wing, params.tether, state.r);
  const double r = state.r;
  const double ct = std::cos(state.theta), st = std::sin(state.theta);

  StateDerivative d;
  d.phi_dot = state.phi_dot;
  d.theta_dot = state.theta_dot;
  d.r_dot = state.r_dot;
  d.theta_ddot = f.total.x / (r * m) - st * ct * state.phi_dot * state.phi_dot -
                 2.0 / r * state.theta_dot * state.r_dot;
  d.phi_ddot = f.total.y / (r * m * ct) +
               2.0 * (st / ct) * state.theta_dot * state.phi_dot -
               2.0 / r * state.phi_dot * state.r_dot;
  d.r_ddot = -f.total.z / m + r * state.theta_dot * state.theta_dot +
             r * ct * ct * state.phi_dot * state.phi_dot;
  return d;
}

namespace {

KinematicState advance(const KinematicState& s, const StateDerivative& d,
                       double h) {
  return {s.phi + h * d.phi_dot,     s.theta + h * d.theta_dot,
          s.r + h * d.r_dot,         s.phi_dot + h * d.phi_ddot,
          s.theta_dot + h * d.theta_ddot, s.r_dot + h * d.r_ddot};
}

bool finite(const KinematicState& s) {
  return std::isfinite(s.phi) && std::isfinite(s.theta) && std::isfinite(s.r) &&
         std::isfinite(s.phi_dot) && std::isfinite(s.theta_dot) &&
         std::isfinite(s.r_dot);
}

}  // namespace

KinematicState integrate_step(const KinematicState& state, const WindField& wind,
                              double delta, double line_force,
                              const SystemParams& params, double dt) {
  const StateDerivative k1 = state_derivative(state, wind, delta, line_force, params);
  const StateDerivative k2 =
      state_derivative(advance(state, k1, dt / 2.0), wind, delta, line_force, params);
  const StateDerivative k3 =
      state_derivative(advance(state, k2, dt / 2.0), wind, delta, line_force, params);
  const StateDerivative k4 =
      state_derivative(advance(state, k3, dt), wind, delta, line_force, params);

  KinematicState out = state;
  out.phi += dt / 6.0 * (k1.phi_dot + 2.0 * k2.phi_dot + 2.0 * k3.phi_dot + k4.phi_dot);
  out.theta +=
      dt / 6.0 * (k1.theta_dot + 2.0 * k2.theta_dot + 2.0 * k3.theta_dot + k4.theta_dot);
  out.r += dt / 6.0 * (k1.r_dot + 2.0 * k2.r_dot + 2.0 * k3.r_dot + k4.r_dot);
  out.phi_dot +=
      dt / 6.0 * (k1.phi_ddot + 2.0 * k2.phi_ddot + 2.0 * k3.phi_ddot + k4.phi_ddot);
  out.theta_dot += dt / 6.0 *
                   (k1.theta_ddot + 2.0 * k2.theta_ddot + 2.0 * k3.theta_ddot +
                    k4.theta_ddot);
  out.r_dot +=
      dt / 6.0 * (k1.r_ddot + 2.0 * k2.r_ddot + 2.0 * k3.r_ddot + k4.r_ddot);

  if (!finite(out)) throw NumericBlowup("state became non-finite");
  return out;
}

}  // namespace awe
