#include "awe/geometry.hpp"

#include <cmath>

#include "awe/errors.hpp"

namespace awe {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double wrap_angle(double angle) {
  double a = std::fmod(angle, 2.0 * kPi);
  if (a <= -kPi) a += 2.0 * kPi;
  if (a > kPi) a -= 2.0 * kPi;
  return a;
}

RotationLG::RotationLG(double phi, double theta) {
  const double cp = std::cos(phi), sp = std::sin(phi);
  const double ct = std::cos(theta), st = std::sin(theta);
  m_ = {{{-cp * st, -sp * st, ct},
         {-sp, cp, 0.0},
         {-cp * ct, -sp * ct, -st}}};
}

LocalVec RotationLG::apply(const GroundVec& v) const {
  return {m_[0][0] * v.x + m_[0][1] * v.y + m_[0][2] * v.z,
          m_[1][0] * v.x + m_[1][1] * v.y + m_[1][2] * v.z,
          m_[2][0] * v.x + m_[2][1] * v.y + m_[2][2] * v.z};
}

GroundVec RotationLG::apply_inverse(const LocalVec& v) const {
  // Orthonormal, so the inverse is the transpose.
  return {m_[0][0] * v.x + m_[1][0] * v.y + m_[2][0] * v.z,
          m_[0][1] * v.x + m_[1][1] * v.y + m_[2][1] * v.z,
          m_[0][2] * v.x + m_[1][2] * v.y + m_[2][2] * v.z};
}

RotationLG rotation_lg(double phi, double theta) { return {phi, theta}; }

GroundVec wing_position(const KinematicState& state) {
  const double ct = std::cos(state.theta);
  return {state.r * std::cos(state.phi) * ct,
          state.r * std::sin(state.phi) * ct,
          state.r * std::sin(state.theta)};
}

LocalVec local_velocity(const KinematicState& state) {
  return {state.r * state.theta_dot,
          state.r * std::cos(state.theta) * state.phi_dot,
          -state.r_dot};
}

LocalVec wind_local(const KinematicState& state, const WindField& wind) {
  const double altitude = state.r * std::sin(state.theta);
  const double w = wind.speed_at(altitude);
  const double dphi = state.phi - wind.phi_w;
  return {-w * std::cos(dphi) * std::sin(state.theta),
          -w * std::sin(dphi),
          -w * std::cos(dphi) * std::cos(state.theta)};
}

LocalVec apparent_wind(const KinematicState& state, const WindField& wind) {
  return wind_local(state, wind) - local_velocity(state);
}

double velocity_angle(const KinematicState& state, double epsilon) {
  const double north = state.theta_dot;
  const double east = std::cos(state.theta) * state.phi_dot;
  if (std::hypot(north, east) < epsilon) {
    throw UndefinedVelocityAngle("tangent-plane speed below epsilon");
  }
  return std::atan2(east, north);
}

double wing_orientation_beta(const KinematicState& state,
                             const WindField& wind) {
  const double dphi = state.phi - wind.phi_w;
  const double east = std::sin(dphi);
  const double north = std::sin(state.theta) * std::cos(dphi);
  if (east == 0.0 && north == 0.0) {
    throw UndefinedAngle("wing orientation undefined at singular point");
  }
  return std::atan2(east, north);
}

double regularized_velocity_angle(const KinematicState& state,
                                  const WindField& wind, double c) {
  const double dphi = state.phi - wind.phi_w;
  const double east = std::cos(state.theta) * state.phi_dot + c * std::sin(dphi);
  const double north =
      state.theta_dot + c * std::sin(state.theta) * std::cos(dphi);
  if (east == 0.0 && north == 0.0) {
    throw UndefinedAngle("regularized velocity angle undefined: exact 0/0");
  }
  return std::atan2(east, north);
}

}  // namespace awe
