#include <array>
#include <cmath>

#include "awe/dynamics.hpp"
#include "awe/errors.hpp"

namespace awe {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Line force balancing r_ddot = 0 at a static angular position.
double balancing_line_force(const KinematicState& s, const WindField& wind,
                            double delta, const SystemParams& params) {
  const ForceBreakdown f = compute_forces(s, wind, delta, 0.0, params);
  return -(f.gravity.z + f.aero.z);
}

// Tangent-plane accelerations at a static angular position (phi, theta).
std::array<double, 2> residual(double phi, double theta, double delta,
                               const WindField& wind, const SystemParams& params,
                               double r) {
  KinematicState s;
  s.phi = phi;
  s.theta = theta;
  s.r = r;
  const double fc = std::max(0.0, balancing_line_force(s, wind, delta, params));
  const StateDerivative d = state_derivative(s, wind, delta, fc, params);
  return {d.theta_ddot, d.phi_ddot};
}

Equilibrium make_result(double phi, double theta, double delta,
                        const WindField& wind, const SystemParams& params,
                        double r) {
  Equilibrium eq;
  eq.state = KinematicState{phi, theta, r, 0.0, 0.0, 0.0};
  eq.delta = delta;
  eq.line_force = balancing_line_force(eq.state, wind, delta, params);
  const auto res = residual(phi, theta, delta, wind, params, r);
  eq.residual = std::hypot(res[0], res[1]);
  if (eq.line_force < 0.0) {
    throw NoEquilibrium("equilibrium requires a pushing line (slack tether)");
  }
  return eq;
}

}  // namespace

namespace {

// Damped Newton from one starting point; returns false when it stalls.
bool newton_from(double& phi, double& theta, double delta, const WindField& wind,
                 const SystemParams& params, double r) {
  constexpr int kMaxIter = 100;
  constexpr double kTol = 1e-10;
  constexpr double kStep = 1e-6;

  auto norm2 = [](const std::array<double, 2>& v) {
    return std::hypot(v[0], v[1]);
  };

  std::array<double, 2> f = residual(phi, theta, delta, wind, params, r);
  for (int it = 0; it < kMaxIter; ++it) {
    if (norm2(f) < kTol) break;

    // Central-difference Jacobian of (theta_ddot, phi_ddot) w.r.t. (phi, theta).
    const auto fpp = residual(phi + kStep, theta, delta, wind, params, r);
    const auto fpm = residual(phi - kStep, theta, delta, wind, params, r);
    const auto ftp = residual(phi, theta + kStep, delta, wind, params, r);
    const auto ftm = residual(phi, theta - kStep, delta, wind, params, r);
    const double j00 = (fpp[0] - fpm[0]) / (2.0 * kStep);
    const double j01 = (ftp[0] - ftm[0]) / (2.0 * kStep);
    const double j10 = (fpp[1] - fpm[1]) / (2.0 * kStep);
    const double j11 = (ftp[1] - ftm[1]) / (2.0 * kStep);

    const double det = j00 * j11 - j01 * j10;
    if (std::abs(det) < 1e-14) return false;
    const double dphi = (-f[0] * j11 + f[1] * j01) / det;
    const double dtheta = (-f[1] * j00 + f[0] * j10) / det;

    // Backtracking line search.
    double lambda = 1.0;
    bool improved = false;
    for (int k = 0; k < 25; ++k, lambda *= 0.5) {
      const double p = phi + lambda * dphi;
      const double t = theta + lambda * dtheta;
      if (std::abs(t) > kPi / 2.0 - kThetaGuard) continue;
      const auto fn = residual(p, t, delta, wind, params, r);
      if (norm2(fn) < norm2(f)) {
        phi = p;
        theta = t;
        f = fn;
        improved = true;
        break;
      }
    }
    if (!improved) return norm2(f) < 1e-8;
  }
  return norm2(f) < 1e-8;
}

}  // namespace

Equilibrium find_equilibrium(double delta, const WindField& wind,
                             const SystemParams& params, double r,
                             WindowSide side) {
  if (wind.w0 <= 0.0) throw NoEquilibrium("no equilibrium without wind");

  const double sgn = side == WindowSide::Left ? 1.0 : -1.0;
  // The Newton basin is narrow near the border; sweep elevation starts and
  // keep the first converged point inside the requested half window.
  for (double theta0 : {0.7, 0.9, 1.1, 0.5, 1.3, 0.3, 1.45, 0.15}) {
    for (double offset : {0.0, -0.3, -0.6}) {
      double phi = wind.phi_w + sgn * (kPi / 2.0 + offset);
      double theta = theta0;
      try {
        if (!newton_from(phi, theta, delta, wind, params, r)) continue;
      } catch (const DomainError&) {
        continue; // iterate ran into the ground/zenith guard
      }
      const double dphi = wrap_angle(phi - wind.phi_w);
      if (sgn * dphi <= 0.0 || sgn * dphi >= kPi) continue; // wrong half window
      if (theta <= 0.0) continue;                           // below the horizon
      try {
        return make_result(phi, theta, delta, wind, params, r);
      } catch (const NoEquilibrium&) {
        continue; // slack line at this point, keep looking
      }
    }
  }
  throw NoEquilibrium("no window equilibrium found for this steering input");
}

Equilibrium find_equilibrium_for_theta(double theta_target, const WindField& wind,
                                       const SystemParams& params, double r,
                                       WindowSide side) {
  // Not every steering input admits a window equilibrium, so seed the
  // secant iteration from a coarse scan instead of fixed guesses.
  double d0 = 0.0, d1 = 0.0, e0 = 0.0, e1 = 0.0;
  double best0 = 1e300, best1 = 1e300;
  for (int i = -7; i <= 7; ++i) {
    const double d = 0.05 * static_cast<double>(i);
    try {
      const Equilibrium eq = find_equilibrium(d, wind, params, r, side);
      const double err = eq.state.theta - theta_target;
      if (std::abs(err) < best1) {
        if (std::abs(err) < best0) {
          best1 = best0;
          d1 = d0;
          e1 = e0;
          best0 = std::abs(err);
          d0 = d;
          e0 = err;
        } else {
          best1 = std::abs(err);
          d1 = d;
          e1 = err;
        }
      }
    } catch (const SimulationError&) {
      // outside the feasible range of inputs
    }
  }
  if (best1 >= 1e300) {
    throw NoConvergence("steering input for target elevation not found");
  }

  for (int it = 0; it < 60; ++it) {
    if (std::abs(e0) < 1e-9) return find_equilibrium(d0, wind, params, r, side);
    const double denom = e0 - e1;
    if (std::abs(denom) < 1e-15) break;
    const double d2 = d0 - e0 * (d0 - d1) / denom;
    Equilibrium eq;
    try {
      eq = find_equilibrium(d2, wind, params, r, side);
    } catch (const SimulationError&) {
      break; // stepped outside the feasible range
    }
    d1 = d0;
    e1 = e0;
    d0 = d2;
    e0 = eq.state.theta - theta_target;
    if (std::abs(e0) < 1e-9) return eq;
  }
  throw NoConvergence("steering input for target elevation not found");
}

Equilibrium simulate_to_equilibrium(double delta, const WindField& wind,
                                    const SystemParams& params, double r,
                                    WindowSide side, double horizon, double dt) {
  KinematicState s;
  s.phi = wind.phi_w + (side == WindowSide::Left ? kPi / 2.0 : -kPi / 2.0) - 0.1;
  s.theta = 0.6;
  s.r = r;

  const int steps = static_cast<int>(horizon / dt);
  for (int i = 0; i < steps; ++i) {
    // Lock the tether length: command the line force that keeps r_ddot = 0.
    const ForceBreakdown f = compute_forces(s, wind, delta, 0.0, params);
    const double m = effective_mass(params.wing, params.tether, s.r);
    const double ct = std::cos(s.theta);
    double fc = -(f.gravity.z + f.aero.z) +
                m * (s.r * s.theta_dot * s.theta_dot +
                     s.r * ct * ct * s.phi_dot * s.phi_dot);
    fc = std::max(0.0, fc);
    s = integrate_step(s, wind, delta, fc, params, dt);
    s.r = r;
    s.r_dot = 0.0;
  }

  const double speed = std::hypot(s.theta_dot, std::cos(s.theta) * s.phi_dot);
  if (speed > 1e-4) {
    throw NoConvergence("constant-input simulation did not settle");
  }
  return make_result(s.phi, s.theta, delta, wind, params, r);
}

}  // namespace awe
