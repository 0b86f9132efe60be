#include "awe/actuator.hpp"

#include <algorithm>
#include <cmath>

namespace awe {

namespace {

struct Deriv {
  double v;
  double a;
};

Deriv deriv(const ActuatorState& s, const ActuatorParams& p, double ref) {
  const double w2 = p.omega_cl * p.omega_cl;
  return {s.delta_m_dot,
          w2 * ref - 2.0 * p.zeta_cl * p.omega_cl * s.delta_m_dot - w2 * s.delta_m};
}

}  // namespace

ActuatorState actuator_step(const ActuatorState& act, const ActuatorParams& p,
                            double delta_ref, double dt) {
  const Deriv k1 = deriv(act, p, delta_ref);
  const Deriv k2 = deriv({act.delta_m + dt / 2.0 * k1.v, act.delta_m_dot + dt / 2.0 * k1.a},
                         p, delta_ref);
  const Deriv k3 = deriv({act.delta_m + dt / 2.0 * k2.v, act.delta_m_dot + dt / 2.0 * k2.a},
                         p, delta_ref);
  const Deriv k4 = deriv({act.delta_m + dt * k3.v, act.delta_m_dot + dt * k3.a}, p,
                         delta_ref);

  ActuatorState out;
  out.delta_m = act.delta_m + dt / 6.0 * (k1.v + 2.0 * k2.v + 2.0 * k3.v + k4.v);
  out.delta_m_dot =
      act.delta_m_dot + dt / 6.0 * (k1.a + 2.0 * k2.a + 2.0 * k3.a + k4.a);

  out.delta_m_dot = std::clamp(out.delta_m_dot, -p.rate_limit, p.rate_limit);
  out.delta_m = std::clamp(out.delta_m, -p.position_limit, p.position_limit);
  return out;
}

}  // namespace awe
