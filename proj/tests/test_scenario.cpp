#include "doctest.h"

#include <cmath>
#include <sstream>

#include "awe/errors.hpp"
#include "awe/scenario.hpp"

using namespace awe;

namespace {

Scenario parse(const std::string& text) {
  std::istringstream in(text);
  return parse_scenario(in);
}

constexpr double kPi = 3.14159265358979323846;

}  // namespace

TEST_CASE("empty scenario yields the default parameter set") {
  const Scenario sc = parse("");

  CHECK(sc.params.wing.area == 9.0);
  CHECK(sc.params.wing.span == 2.7);
  CHECK(sc.params.wing.mass == 2.45);
  CHECK(sc.params.wing.lift_coeff == 0.8);
  CHECK(sc.params.wing.eq_efficiency == 3.7);
  CHECK(sc.params.tether.diameter == 0.003);
  CHECK(sc.params.tether.density == 970.0);
  CHECK(sc.params.tether.mass_lumping == 0.5);
  CHECK(sc.params.env.air_density == 1.2);
  CHECK(sc.params.env.gravity == 9.81);

  CHECK(sc.wind.speed == 5.0);
  CHECK(sc.wind.direction == 0.0);
  CHECK(sc.wind.shear == ShearModel::None);
  CHECK_FALSE(sc.wind.gust_enabled);

  CHECK(sc.actuator.omega_cl == 78.0);
  CHECK(sc.actuator.zeta_cl == 0.7);
  CHECK(sc.actuator.k_delta == 1.0);
  CHECK(sc.actuator.position_limit == 0.4);
  CHECK(sc.actuator.rate_limit == 10.0);

  CHECK(sc.controller.kc_traction == 0.056);
  CHECK(sc.controller.kc_retraction == 0.28);
  CHECK(sc.controller.k_theta == -2.5);
  CHECK(sc.controller.k1_sf == -1.4);
  CHECK(sc.controller.k2_sf == -4.6);
  CHECK(sc.controller.theta_ref == 1.0);
  CHECK(sc.controller.gamma_min == doctest::Approx(kPi / 2.0 - 0.6));
  CHECK(sc.controller.gamma_max == doctest::Approx(kPi / 2.0 + 0.6));
  CHECK(sc.controller.regularization_c == 0.05);
  CHECK(sc.controller.retraction_side == WindowSide::Left);
  CHECK(sc.retraction_law == RetractionLaw::ElevationSF);

  CHECK(sc.winch.drum_radius == 0.2);
  CHECK(sc.winch.torque_min == 16.0);
  CHECK(sc.winch.torque_max == 600.0);
  CHECK(sc.winch.retraction_torque == 0.0);
  CHECK(sc.winch.retraction_reel_in == 2.5);
  CHECK(sc.winch.r_min == 50.0);
  CHECK(sc.winch.r_max == 150.0);

  CHECK(sc.sim.duration == 600.0);
  CHECK(sc.sim.dt == 1e-3);
  CHECK(sc.sim.decimation == 10);
  CHECK(sc.initial_state().r == 60.0);
  CHECK(sc.initial_state().theta == 0.6);
}

TEST_CASE("keys round-trip through all sections") {
  const Scenario sc = parse(
      "# full override\n"
      "[wing]\n"
      "area = 12.5\n"
      "span = 3.1\n"
      "mass = 3.0\n"
      "lift_coefficient = 0.9\n"
      "equivalent_efficiency = 4.2\n"
      "[tether]\n"
      "diameter = 0.004\n"
      "density = 950\n"
      "mass_lumping = 0.4\n"
      "[env]\n"
      "air_density = 1.1\n"
      "gravity = 9.8\n"
      "[wind]\n"
      "speed = 7.0\n"
      "direction = 0.3\n"
      "shear = power_law\n"
      "shear_exponent = 0.2\n"
      "shear_reference_height = 10\n"
      "gust_enabled = true\n"
      "gust_intensity = 0.5\n"
      "gust_bandwidth = 0.2\n"
      "seed = 42\n"
      "[actuator]\n"
      "natural_frequency = 60\n"
      "damping = 0.8\n"
      "gain = 1.1\n"
      "position_limit = 0.35\n"
      "rate_limit = 8\n"
      "[controller]\n"
      "kc_traction = 0.06\n"
      "kc_retraction = 0.3\n"
      "k_theta = -2.0\n"
      "k1_sf = -1.0\n"
      "k2_sf = -4.0\n"
      "theta_ref = 0.9\n"
      "gamma_min = 1.0\n"
      "gamma_max = 2.2\n"
      "regularization = 0.04\n"
      "target_phi_offset = 0.3   # inline comment\n"
      "target_theta = 0.4\n"
      "retraction_entry_dphi = 0.2\n"
      "downwind_tolerance = 0.35\n"
      "retraction_side = right\n"
      "retraction_law = regularized_gamma\n"
      "[winch]\n"
      "drum_radius = 0.25\n"
      "torque_min = 10\n"
      "torque_max = 500\n"
      "retraction_torque = 120\n"
      "retraction_reel_in = 2.0\n"
      "hold_gain = 1500\n"
      "r_min = 40\n"
      "r_max = 140\n"
      "[sim]\n"
      "duration = 300\n"
      "dt = 0.002\n"
      "decimation = 5\n"
      "initial_phi = 0.1\n"
      "initial_theta = 0.5\n"
      "initial_r = 70\n"
      "initial_phi_dot = 0.01\n"
      "initial_theta_dot = 0.02\n"
      "initial_r_dot = 0.1\n");

  CHECK(sc.params.wing.area == 12.5);
  CHECK(sc.params.wing.span == 3.1);
  CHECK(sc.params.wing.mass == 3.0);
  CHECK(sc.params.wing.lift_coeff == 0.9);
  CHECK(sc.params.wing.eq_efficiency == 4.2);
  CHECK(sc.params.tether.diameter == 0.004);
  CHECK(sc.params.tether.density == 950.0);
  CHECK(sc.params.tether.mass_lumping == 0.4);
  CHECK(sc.params.env.air_density == 1.1);
  CHECK(sc.params.env.gravity == 9.8);
  CHECK(sc.wind.speed == 7.0);
  CHECK(sc.wind.direction == 0.3);
  CHECK(sc.wind.shear == ShearModel::PowerLaw);
  CHECK(sc.wind.gust_enabled);
  CHECK(sc.wind.gust_intensity == 0.5);
  CHECK(sc.wind.seed == 42u);
  CHECK(sc.actuator.omega_cl == 60.0);
  CHECK(sc.actuator.zeta_cl == 0.8);
  CHECK(sc.actuator.k_delta == 1.1);
  CHECK(sc.controller.kc_traction == 0.06);
  CHECK(sc.controller.k_theta == -2.0);
  CHECK(sc.controller.target_phi_offset == 0.3);
  CHECK(sc.controller.retraction_side == WindowSide::Right);
  CHECK(sc.retraction_law == RetractionLaw::RegularizedGamma);
  CHECK(sc.winch.drum_radius == 0.25);
  CHECK(sc.winch.retraction_torque == 120.0);
  CHECK(sc.winch.hold_gain == 1500.0);
  CHECK(sc.sim.duration == 300.0);
  CHECK(sc.sim.decimation == 5);
  CHECK(sc.initial_state().phi == 0.1);
  CHECK(sc.initial_state().r_dot == 0.1);

  // power-law shear scales the wind with altitude
  const WindField w = sc.wind.field();
  CHECK(w.speed_at(10.0) == doctest::Approx(7.0));
  CHECK(w.speed_at(80.0) == doctest::Approx(7.0 * std::pow(8.0, 0.2)));
}

TEST_CASE("parse errors carry line numbers") {
  SUBCASE("unknown section") {
    CHECK_THROWS_WITH_AS(parse("[nope]\n"), "line 1: unknown section 'nope'",
                         ParseError);
  }
  SUBCASE("unknown key") {
    try {
      parse("[wing]\nnope = 1\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("bad number") {
    CHECK_THROWS_AS(parse("[wing]\narea = fast\n"), ParseError);
  }
  SUBCASE("trailing characters") {
    CHECK_THROWS_AS(parse("[wing]\narea = 9.0abc\n"), ParseError);
  }
  SUBCASE("unterminated section header") {
    CHECK_THROWS_AS(parse("[wing\n"), ParseError);
  }
  SUBCASE("key outside any section") {
    CHECK_THROWS_AS(parse("area = 9\n"), ParseError);
  }
  SUBCASE("missing equals sign") {
    CHECK_THROWS_AS(parse("[wing]\narea 9\n"), ParseError);
  }
  SUBCASE("bad boolean") {
    CHECK_THROWS_AS(parse("[wind]\ngust_enabled = maybe\n"), ParseError);
  }
  SUBCASE("unknown enum values") {
    CHECK_THROWS_AS(parse("[wind]\nshear = banana\n"), ParseError);
    CHECK_THROWS_AS(parse("[controller]\nretraction_side = up\n"), ParseError);
    CHECK_THROWS_AS(parse("[controller]\nretraction_law = magic\n"), ParseError);
  }
}

TEST_CASE("validation rejects inconsistent configurations") {
  CHECK_THROWS_AS(parse("[wing]\narea = -1\n"), ValidationError);
  CHECK_THROWS_AS(parse("[wing]\nmass = 0\n"), ValidationError);
  CHECK_THROWS_AS(parse("[tether]\nmass_lumping = 1.5\n"), ValidationError);
  CHECK_THROWS_AS(parse("[env]\nair_density = 0\n"), ValidationError);
  CHECK_THROWS_AS(parse("[wind]\nspeed = -2\n"), ValidationError);
  CHECK_THROWS_AS(parse("[sim]\nduration = 0\n"), ValidationError);
  CHECK_THROWS_AS(parse("[sim]\ndt = -0.001\n"), ValidationError);
  CHECK_THROWS_AS(parse("[sim]\ndecimation = 0\n"), ValidationError);
  CHECK_THROWS_AS(parse("[winch]\nr_min = 200\n"), ValidationError);
  CHECK_THROWS_AS(parse("[winch]\ntorque_min = 700\n"), ValidationError);
  CHECK_THROWS_AS(parse("[controller]\nk_theta = 0.5\n"), ValidationError);
  CHECK_THROWS_AS(parse("[controller]\ngamma_min = 1.6\n"), ValidationError);
  CHECK_THROWS_AS(parse("[controller]\nregularization = 0\n"), ValidationError);
  CHECK_THROWS_AS(parse("[sim]\ninitial_theta = 1.6\n"), ValidationError);
  CHECK_THROWS_AS(parse("[sim]\ninitial_r = -5\n"), ValidationError);
}

TEST_CASE("comments and whitespace are ignored") {
  const Scenario sc = parse(
      "# leading comment\n"
      "\n"
      "  [wing]  \n"
      "  area   =   10.0  # trailing\n"
      "# [tether]\n");
  CHECK(sc.params.wing.area == 10.0);
  CHECK(sc.params.tether.diameter == 0.003);
}

TEST_CASE("missing file") {
  CHECK_THROWS_AS(load_scenario("/nonexistent/path.scn"), ParseError);
}
