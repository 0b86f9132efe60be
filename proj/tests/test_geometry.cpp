#include "doctest.h"

#include <cmath>

#include "awe/errors.hpp"
#include "awe/geometry.hpp"

using namespace awe;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("wrap_angle maps into (-pi, pi]") {
  CHECK(wrap_angle(0.0) == doctest::Approx(0.0));
  CHECK(wrap_angle(kPi) == doctest::Approx(kPi));
  CHECK(wrap_angle(-kPi) == doctest::Approx(kPi));
  CHECK(wrap_angle(3.0 * kPi) == doctest::Approx(kPi));
  CHECK(wrap_angle(2.0 * kPi + 0.3) == doctest::Approx(0.3));
  CHECK(wrap_angle(-2.0 * kPi - 0.3) == doctest::Approx(-0.3));
  for (double a = -20.0; a <= 20.0; a += 0.37) {
    const double w = wrap_angle(a);
    CHECK(w > -kPi - 1e-15);
    CHECK(w <= kPi + 1e-15);
    // same point on the circle
    CHECK(std::sin(w) == doctest::Approx(std::sin(a)).epsilon(1e-12));
    CHECK(std::cos(w) == doctest::Approx(std::cos(a)).epsilon(1e-12));
  }
}

TEST_CASE("wing_position spherical coordinates") {
  KinematicState s;
  s.phi = 0.0;
  s.theta = 0.0;
  s.r = 100.0;
  GroundVec p = wing_position(s);
  CHECK(p.x == doctest::Approx(100.0));
  CHECK(p.y == doctest::Approx(0.0));
  CHECK(p.z == doctest::Approx(0.0));

  s.theta = kPi / 2.0 - 1e-9; // straight up
  p = wing_position(s);
  CHECK(p.z == doctest::Approx(100.0));

  s.phi = 0.7;
  s.theta = 0.4;
  s.r = 80.0;
  p = wing_position(s);
  CHECK(p.norm() == doctest::Approx(80.0).epsilon(1e-12));
  CHECK(std::atan2(p.y, p.x) == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(std::asin(p.z / 80.0) == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("rotation is orthonormal and maps the position to (0,0,-r)") {
  for (double phi : {-2.0, 0.0, 0.9, 2.8}) {
    for (double theta : {-1.2, 0.0, 0.3, 1.4}) {
      const RotationLG rot = rotation_lg(phi, theta);
      // R R' = I to machine precision
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          double dot = 0.0;
          for (int k = 0; k < 3; ++k) dot += rot.entry(i, k) * rot.entry(j, k);
          CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) < 1e-12);
        }
      }
      // det = +1 via the triple product of the rows
      const GroundVec r0{rot.entry(0, 0), rot.entry(0, 1), rot.entry(0, 2)};
      const GroundVec r1{rot.entry(1, 0), rot.entry(1, 1), rot.entry(1, 2)};
      const GroundVec r2{rot.entry(2, 0), rot.entry(2, 1), rot.entry(2, 2)};
      CHECK(r0.cross(r1).dot(r2) == doctest::Approx(1.0).epsilon(1e-12));

      KinematicState s;
      s.phi = phi;
      s.theta = theta;
      s.r = 123.0;
      const LocalVec local = rot.apply(wing_position(s));
      CHECK(std::abs(local.x) < 1e-9);
      CHECK(std::abs(local.y) < 1e-9);
      CHECK(local.z == doctest::Approx(-123.0).epsilon(1e-12));

      // inverse round trip
      const GroundVec v{0.3, -1.7, 2.2};
      const GroundVec back = rot.apply_inverse(rot.apply(v));
      CHECK(back.x == doctest::Approx(v.x).epsilon(1e-12));
      CHECK(back.y == doctest::Approx(v.y).epsilon(1e-12));
      CHECK(back.z == doctest::Approx(v.z).epsilon(1e-12));
    }
  }
}

TEST_CASE("local_velocity matches the finite difference of the position") {
  KinematicState s;
  s.phi = 0.4;
  s.theta = 0.8;
  s.r = 90.0;
  s.phi_dot = 0.12;
  s.theta_dot = -0.07;
  s.r_dot = 1.5;

  const double h = 1e-6;
  KinematicState sp = s, sm = s;
  sp.phi += h * s.phi_dot;
  sp.theta += h * s.theta_dot;
  sp.r += h * s.r_dot;
  sm.phi -= h * s.phi_dot;
  sm.theta -= h * s.theta_dot;
  sm.r -= h * s.r_dot;
  const GroundVec dp = (wing_position(sp) - wing_position(sm)) * (1.0 / (2.0 * h));
  const LocalVec fd = rotation_lg(s.phi, s.theta).apply(dp);

  const LocalVec v = local_velocity(s);
  CHECK(v.x == doctest::Approx(fd.x).epsilon(1e-6));
  CHECK(v.y == doctest::Approx(fd.y).epsilon(1e-6));
  CHECK(v.z == doctest::Approx(fd.z).epsilon(1e-6));
}

TEST_CASE("wind_local norm and downwind direction") {
  WindField w;
  w.w0 = 7.0;
  w.phi_w = 0.0;

  KinematicState s;
  s.phi = 0.0;
  s.theta = 0.0;
  s.r = 100.0;
  // wing straight downwind at zero elevation: wind purely radial (inward = -z up? no, e_D points down-tether)
  LocalVec wl = wind_local(s, w);
  CHECK(wl.norm() == doctest::Approx(7.0).epsilon(1e-12));
  CHECK(wl.x == doctest::Approx(0.0));
  CHECK(wl.y == doctest::Approx(0.0));
  CHECK(wl.z == doctest::Approx(-7.0)); // along -e_D, away from the ground unit

  // at the window border the wind is purely lateral
  s.phi = kPi / 2.0;
  wl = wind_local(s, w);
  CHECK(wl.x == doctest::Approx(0.0));
  CHECK(wl.y == doctest::Approx(-7.0));
  CHECK(wl.z == doctest::Approx(0.0));

  // elevated downwind point: split between -north and -down components
  s.phi = 0.0;
  s.theta = 0.6;
  wl = wind_local(s, w);
  CHECK(wl.x == doctest::Approx(-7.0 * std::sin(0.6)).epsilon(1e-12));
  CHECK(wl.z == doctest::Approx(-7.0 * std::cos(0.6)).epsilon(1e-12));

  // shear profile scales with altitude
  w.shear = [](double alt) { return alt / 50.0; };
  wl = wind_local(s, w);
  const double altitude = s.r * std::sin(s.theta);
  CHECK(wl.norm() == doctest::Approx(7.0 * altitude / 50.0).epsilon(1e-12));
}

TEST_CASE("apparent wind is wind minus wing velocity") {
  WindField w;
  w.w0 = 5.0;
  KinematicState s;
  s.phi = 0.3;
  s.theta = 0.5;
  s.r = 70.0;
  s.phi_dot = 0.1;
  s.theta_dot = 0.05;
  s.r_dot = -2.0;
  const LocalVec wa = apparent_wind(s, w);
  const LocalVec expect = wind_local(s, w) - local_velocity(s);
  CHECK(wa.x == doctest::Approx(expect.x));
  CHECK(wa.y == doctest::Approx(expect.y));
  CHECK(wa.z == doctest::Approx(expect.z));
}

TEST_CASE("velocity angle quadrants") {
  KinematicState s;
  s.theta = 0.0;
  s.r = 100.0;

  s.theta_dot = 0.1; // due north
  s.phi_dot = 0.0;
  CHECK(velocity_angle(s) == doctest::Approx(0.0));

  s.theta_dot = 0.0; // due east
  s.phi_dot = 0.1;
  CHECK(velocity_angle(s) == doctest::Approx(kPi / 2.0));

  s.theta_dot = -0.1; // due south
  s.phi_dot = 0.0;
  CHECK(std::abs(velocity_angle(s)) == doctest::Approx(kPi));

  s.theta_dot = 0.0; // due west
  s.phi_dot = -0.1;
  CHECK(velocity_angle(s) == doctest::Approx(-kPi / 2.0));

  s.theta_dot = 0.1; // north-east diagonal at theta = 0
  s.phi_dot = 0.1;
  CHECK(velocity_angle(s) == doctest::Approx(kPi / 4.0));

  s.theta_dot = 0.0;
  s.phi_dot = 0.0;
  s.r_dot = 3.0; // radial motion does not define a heading
  CHECK_THROWS_AS(velocity_angle(s), UndefinedVelocityAngle);
}

TEST_CASE("wing orientation beta at the borders") {
  WindField w;
  KinematicState s;
  s.theta = 0.4;

  s.phi = kPi / 2.0;
  CHECK(wing_orientation_beta(s, w) == doctest::Approx(kPi / 2.0));
  s.phi = -kPi / 2.0;
  CHECK(wing_orientation_beta(s, w) == doctest::Approx(-kPi / 2.0));

  s.phi = 0.0; // downwind: beta = 0 for positive elevation
  CHECK(wing_orientation_beta(s, w) == doctest::Approx(0.0));

  s.theta = 0.0; // singular point: downwind at zero elevation
  CHECK_THROWS_AS(wing_orientation_beta(s, w), UndefinedAngle);
}

TEST_CASE("regularized velocity angle") {
  WindField w;
  const double c = 0.05;

  // fast wing: regularization negligible, agrees with the plain angle
  KinematicState s;
  s.phi = 0.2;
  s.theta = 0.4;
  s.r = 100.0;
  s.theta_dot = 0.2;
  s.phi_dot = 0.3;
  CHECK(regularized_velocity_angle(s, w, c) ==
        doctest::Approx(velocity_angle(s)).epsilon(5e-2));

  // static wing at the border: falls back to beta
  KinematicState st;
  st.phi = kPi / 2.0;
  st.theta = 0.9;
  st.r = 100.0;
  CHECK(regularized_velocity_angle(st, w, c) ==
        doctest::Approx(wing_orientation_beta(st, w)));

  // static wing anywhere: equals beta
  st.phi = 0.3;
  st.theta = 0.7;
  CHECK(regularized_velocity_angle(st, w, c) ==
        doctest::Approx(wing_orientation_beta(st, w)).epsilon(1e-12));

  // exact 0/0 cannot be regularized away
  KinematicState sing;
  sing.phi = 0.0;
  sing.theta = 0.0;
  sing.r = 100.0;
  CHECK_THROWS_AS(regularized_velocity_angle(sing, w, c), UndefinedAngle);
}
