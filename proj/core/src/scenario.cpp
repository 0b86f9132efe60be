#include "awe/scenario.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "awe/errors.hpp"

namespace awe {

namespace {
constexpr double kPi = 3.14159265358979323846;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& value, int line) {
  try {
    std::size_t pos = 0;
    const double d = std::stod(value, &pos);
    if (pos != value.size()) throw ParseError("trailing characters after number", line);
    return d;
  } catch (const std::invalid_argument&) {
    throw ParseError("expected a number, got '" + value + "'", line);
  } catch (const std::out_of_range&) {
    throw ParseError("number out of range: '" + value + "'", line);
  }
}

bool parse_bool(const std::string& value, int line) {
  if (value == "true" || value == "on" || value == "1") return true;
  if (value == "false" || value == "off" || value == "0") return false;
  throw ParseError("expected a boolean, got '" + value + "'", line);
}

}  // namespace

WindField WindConfig::field() const {
  WindField w;
  w.w0 = speed;
  w.phi_w = direction;
  if (shear == ShearModel::PowerLaw) {
    const double exponent = shear_exponent;
    const double href = shear_reference_height;
    w.shear = [exponent, href](double altitude) {
      return std::pow(std::max(altitude, 1.0) / href, exponent);
    };
  }
  return w;
}

KinematicState Scenario::initial_state() const {
  return {sim.initial_phi, sim.initial_theta, sim.initial_r,
          sim.initial_phi_dot, sim.initial_theta_dot, sim.initial_r_dot};
}

Scenario parse_scenario(std::istream& in) {
  Scenario sc;

  using Setter = std::function<void(const std::string&, int)>;
  std::map<std::string, std::map<std::string, Setter>> schema;

  auto num = [](double& field) {
    return [&field](const std::string& v, int line) { field = parse_double(v, line); };
  };
  auto boolean = [](bool& field) {
    return [&field](const std::string& v, int line) { field = parse_bool(v, line); };
  };

  schema["wing"] = {
      {"area", num(sc.params.wing.area)},
      {"span", num(sc.params.wing.span)},
      {"mass", num(sc.params.wing.mass)},
      {"lift_coefficient", num(sc.params.wing.lift_coeff)},
      {"equivalent_efficiency", num(sc.params.wing.eq_efficiency)},
  };
  schema["tether"] = {
      {"diameter", num(sc.params.tether.diameter)},
      {"density", num(sc.params.tether.density)},
      {"mass_lumping", num(sc.params.tether.mass_lumping)},
  };
  schema["env"] = {
      {"air_density", num(sc.params.env.air_density)},
      {"gravity", num(sc.params.env.gravity)},
  };
  schema["wind"] = {
      {"speed", num(sc.wind.speed)},
      {"direction", num(sc.wind.direction)},
      {"shear",
       [&sc](const std::string& v, int line) {
         if (v == "none") sc.wind.shear = ShearModel::None;
         else if (v == "power_law") sc.wind.shear = ShearModel::PowerLaw;
         else throw ParseError("unknown shear model '" + v + "'", line);
       }},
      {"shear_exponent", num(sc.wind.shear_exponent)},
      {"shear_reference_height", num(sc.wind.shear_reference_height)},
      {"gust_enabled", boolean(sc.wind.gust_enabled)},
      {"gust_intensity", num(sc.wind.gust_intensity)},
      {"gust_bandwidth", num(sc.wind.gust_bandwidth)},
      {"seed",
       [&sc](const std::string& v, int line) {
         sc.wind.seed = static_cast<unsigned int>(parse_double(v, line));
       }},
  };
  schema["actuator"] = {
      {"natural_frequency", num(sc.actuator.omega_cl)},
      {"damping", num(sc.actuator.zeta_cl)},
      {"gain", num(sc.actuator.k_delta)},
      {"position_limit", num(sc.actuator.position_limit)},
      {"rate_limit", num(sc.actuator.rate_limit)},
  };
  schema["controller"] = {
      {"kc_traction", num(sc.controller.kc_traction)},
      {"kc_retraction", num(sc.controller.kc_retraction)},
      {"k_theta", num(sc.controller.k_theta)},
      {"k1_sf", num(sc.controller.k1_sf)},
      {"k2_sf", num(sc.controller.k2_sf)},
      {"theta_ref", num(sc.controller.theta_ref)},
      {"gamma_min", num(sc.controller.gamma_min)},
      {"gamma_max", num(sc.controller.gamma_max)},
      {"regularization", num(sc.controller.regularization_c)},
      {"target_phi_offset", num(sc.controller.target_phi_offset)},
      {"target_theta", num(sc.controller.target_theta)},
      {"retraction_entry_dphi", num(sc.controller.retraction_entry_dphi)},
      {"downwind_tolerance", num(sc.controller.downwind_tolerance)},
      {"retraction_side",
       [&sc](const std::string& v, int line) {
         if (v == "left") sc.controller.retraction_side = WindowSide::Left;
         else if (v == "right") sc.controller.retraction_side = WindowSide::Right;
         else throw ParseError("unknown window side '" + v + "'", line);
       }},
      {"retraction_law",
       [&sc](const std::string& v, int line) {
         if (v == "regularized_gamma") sc.retraction_law = RetractionLaw::RegularizedGamma;
         else if (v == "elevation_sf") sc.retraction_law = RetractionLaw::ElevationSF;
         else throw ParseError("unknown retraction law '" + v + "'", line);
       }},
  };
  schema["winch"] = {
      {"drum_radius", num(sc.winch.drum_radius)},
      {"torque_min", num(sc.winch.torque_min)},
      {"torque_max", num(sc.winch.torque_max)},
      {"retraction_torque", num(sc.winch.retraction_torque)},
      {"retraction_reel_in", num(sc.winch.retraction_reel_in)},
      {"hold_gain", num(sc.winch.hold_gain)},
      {"r_min", num(sc.winch.r_min)},
      {"r_max", num(sc.winch.r_max)},
  };
  schema["sim"] = {
      {"duration", num(sc.sim.duration)},
      {"dt", num(sc.sim.dt)},
      {"decimation",
       [&sc](const std::string& v, int line) {
         sc.sim.decimation = static_cast<int>(parse_double(v, line));
       }},
      {"initial_phi", num(sc.sim.initial_phi)},
      {"initial_theta", num(sc.sim.initial_theta)},
      {"initial_r", num(sc.sim.initial_r)},
      {"initial_phi_dot", num(sc.sim.initial_phi_dot)},
      {"initial_theta_dot", num(sc.sim.initial_theta_dot)},
      {"initial_r_dot", num(sc.sim.initial_r_dot)},
  };

  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto comment = line.find('#');
    if (comment != std::string::npos) line.erase(comment);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError("unterminated section header", lineno);
      section = trim(line.substr(1, line.size() - 2));
      if (!schema.count(section)) {
        throw ParseError("unknown section '" + section + "'", lineno);
      }
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", lineno);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (section.empty()) throw ParseError("key outside any section", lineno);
    auto& keys = schema.at(section);
    const auto it = keys.find(key);
    if (it == keys.end()) {
      throw ParseError("unknown key '" + key + "' in section [" + section + "]",
                       lineno);
    }
    it->second(value, lineno);
  }

  validate(sc);
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file '" + path + "'");
  return parse_scenario(in);
}

void validate(const WingParams& wing) {
  if (wing.area <= 0.0) throw ValidationError("wing area must be > 0");
  if (wing.span <= 0.0) throw ValidationError("wing span must be > 0");
  if (wing.mass <= 0.0) throw ValidationError("wing mass must be > 0");
  if (wing.lift_coeff <= 0.0) throw ValidationError("lift coefficient must be > 0");
  if (wing.eq_efficiency <= 0.0) throw ValidationError("equivalent efficiency must be > 0");
}

void validate(const TetherParams& tether) {
  if (tether.diameter <= 0.0) throw ValidationError("tether diameter must be > 0");
  if (tether.density <= 0.0) throw ValidationError("tether density must be > 0");
  if (tether.mass_lumping < 0.0 || tether.mass_lumping > 1.0) {
    throw ValidationError("tether mass lumping must be in [0, 1]");
  }
}

void validate(const EnvParams& env) {
  if (env.air_density <= 0.0) throw ValidationError("air density must be > 0");
  if (env.gravity <= 0.0) throw ValidationError("gravity must be > 0");
}

void validate(const WindField& wind) {
  if (wind.w0 < 0.0) throw ValidationError("wind speed must be >= 0");
}

void validate(const Scenario& sc) {
  validate(sc.params.wing);
  validate(sc.params.tether);
  validate(sc.params.env);
  if (sc.wind.speed < 0.0) throw ValidationError("wind speed must be >= 0");
  if (sc.sim.duration <= 0.0) throw ValidationError("duration must be > 0");
  if (sc.sim.dt <= 0.0) throw ValidationError("dt must be > 0");
  if (sc.sim.decimation < 1) throw ValidationError("decimation must be >= 1");
  if (sc.winch.r_min >= sc.winch.r_max) {
    throw ValidationError("r_min must be smaller than r_max");
  }
  if (sc.winch.drum_radius <= 0.0) throw ValidationError("drum radius must be > 0");
  if (sc.winch.torque_min > sc.winch.torque_max) {
    throw ValidationError("torque_min must not exceed torque_max");
  }
  if (sc.controller.k_theta >= 0.0) throw ValidationError("k_theta must be < 0");
  if (!(sc.controller.gamma_min < kPi / 2.0 && kPi / 2.0 < sc.controller.gamma_max)) {
    throw ValidationError("gamma saturation bounds must bracket pi/2");
  }
  if (sc.controller.regularization_c <= 0.0) {
    throw ValidationError("regularization gain must be > 0");
  }
  if (sc.sim.initial_r <= 0.0) throw ValidationError("initial tether length must be > 0");
  if (std::abs(sc.sim.initial_theta) >= kPi / 2.0) {
    throw ValidationError("initial theta must be inside (-pi/2, pi/2)");
  }
}

}  // namespace awe
