#ifndef AWE_PARAMS_HPP
#define AWE_PARAMS_HPP

#include <functional>

namespace awe {

// Physical constants of the wing (Table-I style parameter set).
struct WingParams {
  double area = 9.0;       // effective area A [m^2]
  double span = 2.7;       // wing span d_s [m]
  double mass = 2.45;      // wing mass [kg]
  double lift_coeff = 0.8; // C_L [-]
  double eq_efficiency = 3.7; // E_eq = C_L / C_D,eq [-]
};

struct TetherParams {
  double diameter = 0.003; // d_t [m]
  double density = 970.0;  // rho_t [kg/m^3]
  // Fraction of the tether mass lumped onto the wing. A uniform straight
  // tether contributes half of its mass to the moving end.
  double mass_lumping = 0.5;
};

struct EnvParams {
  double air_density = 1.2; // rho [kg/m^3]
  double gravity = 9.81;    // g [m/s^2]
};

struct SystemParams {
  WingParams wing;
  TetherParams tether;
  EnvParams env;
};

// Uniform wind of speed w0 blowing toward azimuth phi_w, optionally scaled
// by an altitude-dependent shear profile (identity when absent).
struct WindField {
  double w0 = 5.0;    // nominal wind speed [m/s]
  double phi_w = 0.0; // wind direction azimuth [rad]
  std::function<double(double)> shear; // altitude [m] -> speed scale factor

  double speed_at(double altitude) const {
    return shear ? w0 * shear(altitude) : w0;
  }
};

// Throw ValidationError if any invariant is violated. Aggregates themselves
// stay plain so tests can build degenerate configurations on purpose.
void validate(const WingParams& wing);
void validate(const TetherParams& tether);
void validate(const EnvParams& env);
void validate(const WindField& wind);

}  // namespace awe

#endif  // AWE_PARAMS_HPP
