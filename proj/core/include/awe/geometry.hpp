#ifndef AWE_GEOMETRY_HPP
#define AWE_GEOMETRY_HPP

#include <array>
#include <cmath>

#include "awe/params.hpp"

namespace awe {

// Reference systems: G is the inertial frame at the ground unit, L the
// local (north, east, down) frame at the wing. Vectors carry their frame
// as a compile-time tag so a G/L mix-up fails to compile.
enum class Frame { G, L };

template <Frame F>
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(dot(*this)); }
};

template <Frame F>
inline Vec3<F> operator*(double s, const Vec3<F>& v) {
  return v * s;
}

using GroundVec = Vec3<Frame::G>;
using LocalVec = Vec3<Frame::L>;

// Spherical position/velocity of the wing: the six model states.
struct KinematicState {
  double phi = 0.0;       // azimuth [rad]
  double theta = 0.0;     // elevation [rad], in (-pi/2, pi/2)
  double r = 0.0;         // tether length [m], > 0
  double phi_dot = 0.0;   // [rad/s]
  double theta_dot = 0.0; // [rad/s]
  double r_dot = 0.0;     // [m/s]
};

// G -> L rotation, a function of the wing position only.
class RotationLG {
public:
  RotationLG(double phi, double theta);

  LocalVec apply(const GroundVec& v) const;
  GroundVec apply_inverse(const LocalVec& v) const;
  double entry(int row, int col) const { return m_[row][col]; }

private:
  std::array<std::array<double, 3>, 3> m_;
};

// Wraps an angle to (-pi, pi].
double wrap_angle(double angle);

GroundVec wing_position(const KinematicState& state);

RotationLG rotation_lg(double phi, double theta);

// Velocity of the wing w.r.t. the ground unit, in L coordinates.
LocalVec local_velocity(const KinematicState& state);

// Incoming wind at the wing position, in L coordinates.
LocalVec wind_local(const KinematicState& state, const WindField& wind);

LocalVec apparent_wind(const KinematicState& state, const WindField& wind);

// Angle between local north and the wing velocity projected onto the
// tangent plane. Throws UndefinedVelocityAngle when the tangent-plane
// speed is below epsilon.
double velocity_angle(const KinematicState& state, double epsilon = 1e-9);

// Orientation of a wind-aligned wing, from the projected wind direction.
// Throws UndefinedAngle at the exact singular point.
double wing_orientation_beta(const KinematicState& state, const WindField& wind);

// Velocity angle with wind-direction regularization terms (gain c > 0),
// defined also for a static wing.
double regularized_velocity_angle(const KinematicState& state,
                                  const WindField& wind, double c);

}  // namespace awe

#endif  // AWE_GEOMETRY_HPP
