#include "awe/control.hpp"

#include <algorithm>
#include <cmath>

#include "awe/errors.hpp"
#include "awe/reduced_models.hpp"

namespace awe {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

const char* to_string(Phase phase) {
  switch (phase) {
    case Phase::TractionFig8: return "traction";
    case Phase::TransitionToBorder: return "transition_to_border";
    case Phase::Retraction: return "retraction";
    case Phase::TransitionToTraction: return "transition_to_traction";
  }
  return "?";
}

const char* to_string(RetractionLaw law) {
  switch (law) {
    case RetractionLaw::RegularizedGamma: return "regularized_gamma";
    case RetractionLaw::ElevationSF: return "elevation_sf";
  }
  return "?";
}

double velocity_angle_control(double gamma_r, double gamma_r_ref, double k_c) {
  return k_c * wrap_angle(gamma_r_ref - gamma_r);
}

double retraction_gamma_reference(double theta, const ControllerConfig& cfg) {
  const double ref = cfg.k_theta * (cfg.theta_ref - theta) + kPi / 2.0;
  return std::clamp(ref, cfg.gamma_min, cfg.gamma_max);
}

double elevation_state_feedback(double dtheta, double dtheta_dot, double k1,
                                double k2) {
  return -(k1 * dtheta + k2 * dtheta_dot);
}

double gamma_ref_to_target(const KinematicState& state, double target_phi,
                           double target_theta) {
  const double east = std::cos(state.theta) * wrap_angle(target_phi - state.phi);
  const double north = target_theta - state.theta;
  return std::atan2(east, north);
}

double reeling_torque_traction(double traction_coeff, double drum_radius,
                               double r_dot_measured, double torque_min,
                               double torque_max) {
  // Generation-side law only: while the line moves in (or stands still) the
  // winch keeps the minimum tension instead of braking on r_dot^2.
  const double reel_out = std::max(r_dot_measured, 0.0);
  const double torque = 4.0 * traction_coeff * drum_radius * reel_out * reel_out;
  return std::clamp(torque, torque_min, torque_max);
}

double size_retraction_torque(const WinchConfig& winch,
                              const ControllerConfig& cfg, const WindField& wind,
                              const SystemParams& params, double r) {
  if (winch.retraction_torque > 0.0) return winch.retraction_torque;

  const double side = cfg.retraction_side == WindowSide::Left ? 1.0 : -1.0;
  // Below the design wind the static pull shrinks faster than the torque
  // needed to pull the wing out of a slow glide, so the sizing wind is
  // floored at the design cut-in speed.
  WindField sizing_wind = wind;
  sizing_wind.w0 = std::max(wind.w0, 5.0);
  KinematicState s;
  // Size at the retraction entry point: the pull decreases from there toward
  // the border, so a torque balancing the entry pull keeps the reel-in going.
  s.phi = wind.phi_w + side * (kPi / 2.0 - cfg.retraction_entry_dphi);
  s.theta = cfg.theta_ref;
  s.r = r;
  s.r_dot = -winch.retraction_reel_in;

  // Drift position: the motor torque must beat the remaining pull along the
  // tether at the target reel-in speed, with margin, so the reel-in also
  // starts from the slightly stronger pull found away from the sizing point.
  const double margin = 1.8;
  const ForceBreakdown f = compute_forces(s, sizing_wind, 0.0, 0.0, params);
  const double fc = -(f.gravity.z + f.aero.z);
  return margin * std::max(fc, 0.0) * winch.drum_radius;
}

Supervisor::Supervisor(ControllerConfig cfg, WinchConfig winch, RetractionLaw law,
                       SystemParams params)
    : cfg_(std::move(cfg)),
      winch_(std::move(winch)),
      law_(law),
      params_(std::move(params)) {
  traction_coeff_ = traction_coefficient(params_.wing, params_.env);
  retraction_torque_ = winch_.retraction_torque; // may be auto-sized on first use
}

double Supervisor::regularized_angle_held(const KinematicState& state,
                                          const WindField& wind) {
  try {
    last_gamma_r_ = regularized_velocity_angle(state, wind, cfg_.regularization_c);
    has_last_gamma_r_ = true;
  } catch (const UndefinedAngle&) {
    // Hold the last valid angle for one step.
  }
  return has_last_gamma_r_ ? last_gamma_r_ : 0.0;
}

double Supervisor::gravity_turn_feedforward(const KinematicState& state,
                                            const WindField& wind) {
  try {
    const double k = turn_rate_gain(state, wind, params_.wing, params_.env);
    const double t = turn_rate_bias(state, wind, params_.env);
    return std::clamp(-t / k, -0.3, 0.3);
  } catch (const DomainError&) {
    return 0.0;
  } catch (const UndefinedAngle&) {
    return 0.0;
  } catch (const UndefinedVelocityAngle&) {
    // static wing: no heading, no gravity turn to compensate
    return 0.0;
  }
}

double Supervisor::retraction_torque(const KinematicState& state) const {
  // Constant reel-in torque with a one-way brake: reel-out is resisted by
  // the speed servo so the wing cannot kite away from the winch.
  const double brake = winch_.hold_gain * state.r_dot * winch_.drum_radius;
  return std::min(std::max(retraction_torque_, brake), winch_.torque_max);
}

double Supervisor::retraction_delta_ref(const KinematicState& state,
                                        const WindField& wind, double side,
                                        double* gamma_ref_out) {
  if (law_ == RetractionLaw::RegularizedGamma) {
    const double gamma_ref = side * retraction_gamma_reference(state.theta, cfg_);
    const double gamma_r = regularized_angle_held(state, wind);
    if (gamma_ref_out) *gamma_ref_out = gamma_ref;
    return velocity_angle_control(gamma_r, gamma_ref, cfg_.kc_retraction);
  }
  // The elevation plant gain changes sign with sin(phi - phi_w).
  const double sgn = std::sin(wrap_angle(state.phi - wind.phi_w)) >= 0.0 ? 1.0 : -1.0;
  if (gamma_ref_out) *gamma_ref_out = sgn * kPi / 2.0;
  return sgn * elevation_state_feedback(state.theta - cfg_.theta_ref,
                                        state.theta_dot, cfg_.k1_sf, cfg_.k2_sf);
}

double Supervisor::guidance_delta_ref(const KinematicState& state,
                                      const WindField& wind, double target_phi,
                                      double target_theta, double k_c,
                                      double* gamma_ref_out) {
  const double gamma_ref = gamma_ref_to_target(state, target_phi, target_theta);
  const double gamma_r = regularized_angle_held(state, wind);
  if (gamma_ref_out) *gamma_ref_out = gamma_ref;
  return velocity_angle_control(gamma_r, gamma_ref, k_c);
}

void Supervisor::update_phase(const KinematicState& state, const WindField& wind) {
  const double side = cfg_.retraction_side == WindowSide::Left ? 1.0 : -1.0;
  const double border_phi = wind.phi_w + side * kPi / 2.0;
  const double dphi = wrap_angle(state.phi - wind.phi_w);

  switch (phase_) {
    case Phase::TractionFig8:
      if (state.r >= winch_.r_max) phase_ = Phase::TransitionToBorder;
      break;
    case Phase::TransitionToBorder:
      // Hand over to the constant-torque law once the wing has drifted out
      // of the power zone, close to the border.
      if (side * dphi >= kPi / 2.0 - cfg_.retraction_entry_dphi) {
        phase_ = Phase::Retraction;
      }
      break;
    case Phase::Retraction:
      // Also bail out before the upwind pole: past it the swing back no
      // longer returns through the window and the line wraps around the
      // ground unit.
      if (state.r <= winch_.r_min || side * dphi >= kPi - 0.6) {
        phase_ = Phase::TransitionToTraction;
        // Aim for the figure-eight target away from the border side first.
        active_target_ = cfg_.retraction_side == WindowSide::Left ? -1 : +1;
      }
      break;
    case Phase::TransitionToTraction:
      if (std::abs(dphi) < cfg_.downwind_tolerance) {
        phase_ = Phase::TractionFig8;
        ++cycles_completed_;
      }
      break;
  }
}

SupervisorOutput Supervisor::step(const KinematicState& state,
                                  const WindField& wind) {
  update_phase(state, wind);

  if (retraction_torque_ <= 0.0) {
    retraction_torque_ =
        size_retraction_torque(winch_, cfg_, wind, params_,
                               0.5 * (winch_.r_min + winch_.r_max));
  }

  const double side = cfg_.retraction_side == WindowSide::Left ? 1.0 : -1.0;
  const double dphi = wrap_angle(state.phi - wind.phi_w);

  SupervisorOutput out;
  out.phase = phase_;

  switch (phase_) {
    case Phase::TractionFig8: {
      // Switch the target once the wing has flown past it.
      if (active_target_ > 0 && dphi >= cfg_.target_phi_offset) active_target_ = -1;
      if (active_target_ < 0 && dphi <= -cfg_.target_phi_offset) active_target_ = +1;
      const double target_phi = wind.phi_w + active_target_ * cfg_.target_phi_offset;
      out.delta_ref = guidance_delta_ref(state, wind, target_phi, cfg_.target_theta,
                                         cfg_.kc_traction, &out.gamma_r_ref) +
                      gravity_turn_feedforward(state, wind);
      if (state.r >= winch_.r_max) {
        // Full length reached, waiting for a good transition point: stop
        // generating and hold the line.
        out.torque = std::clamp(winch_.hold_gain * state.r_dot * winch_.drum_radius,
                                winch_.torque_min, winch_.torque_max);
      } else {
        out.torque = reeling_torque_traction(traction_coeff_, winch_.drum_radius,
                                             state.r_dot, winch_.torque_min,
                                             winch_.torque_max);
      }
      break;
    }
    case Phase::TransitionToBorder: {
      // Re-target the traction guidance at the border while the winch holds
      // the line; the retraction law takes over close to the border, where
      // the wing slows down into the drift regime. The proportional heading
      // loop alone settles with a large offset against the gravity turn
      // bias, hence the feedforward term.
      const double border_phi = wind.phi_w + side * kPi / 2.0;
      out.delta_ref = guidance_delta_ref(state, wind, border_phi, cfg_.theta_ref,
                                         cfg_.kc_retraction, &out.gamma_r_ref) +
                      gravity_turn_feedforward(state, wind);
      // The reel-in torque is already applied here: the radial inflow tilts
      // the lift toward the zenith, without it the wing cannot hold the
      // climb once it slows down near the border.
      out.torque = retraction_torque(state);
      break;
    }
    case Phase::Retraction:
      out.delta_ref = retraction_delta_ref(state, wind, side, &out.gamma_r_ref);
      out.torque = retraction_torque(state);
      break;
    case Phase::TransitionToTraction: {
      const double target_phi = wind.phi_w + active_target_ * cfg_.target_phi_offset;
      // Azimuth error unwrapped toward the window: from deep on the border
      // side the shortest arc to the target may lead over the upwind pole,
      // which would wrap the line around the ground unit.
      double dlon = wrap_angle(target_phi - state.phi);
      if (side * dphi > kPi / 2.0 && side * dlon > 0.0) dlon -= side * 2.0 * kPi;
      const double east = std::cos(state.theta) * dlon;
      const double north = cfg_.target_theta - state.theta;
      const double gamma_ref = std::atan2(east, north);
      out.gamma_r_ref = gamma_ref;
      // Keep the higher retraction gain until the wing is downwind again.
      out.delta_ref = velocity_angle_control(regularized_angle_held(state, wind),
                                             gamma_ref, cfg_.kc_retraction) +
                      gravity_turn_feedforward(state, wind);
      // Hold the line: the wing swings back into the window on a fixed
      // radius instead of diving below the minimum length.
      out.torque = std::clamp(winch_.hold_gain * state.r_dot * winch_.drum_radius,
                              winch_.torque_min, winch_.torque_max);
      break;
    }
  }
  return out;
}

}  // namespace awe
