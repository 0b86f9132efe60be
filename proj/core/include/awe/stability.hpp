#ifndef AWE_STABILITY_HPP
#define AWE_STABILITY_HPP

#include <Eigen/Dense>
#include <functional>
#include <iosfwd>
#include <vector>

#include "awe/actuator.hpp"

namespace awe {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Axis-aligned box of uncertain parameters.
struct ParamBox {
  std::vector<Interval> dims;
};

using VertexBuilder =
    std::function<Eigen::Matrix4d(const std::vector<double>&)>;

// Closed loop of the regularized-velocity-angle design,
// x = [dtheta, dgamma_r, delta_m, delta_m_dot].
Eigen::Matrix4d build_acl_gamma(double turn_gain, double wa_tangent, double r,
                                double k_theta, double k_c,
                                const ActuatorParams& act);

// Closed loop of the elevation state-feedback design,
// x = [dtheta, dtheta_dot, delta_m, delta_m_dot].
Eigen::Matrix4d build_acl_elevation(double r, double r_dot, double elevation_gain,
                                    double theta_ref, double k1, double k2,
                                    const ActuatorParams& act, double gravity);

// All corner combinations of the box, deduplicated (degenerate intervals
// halve the count).
std::vector<Eigen::Matrix4d> enumerate_vertices(const ParamBox& box,
                                                const VertexBuilder& builder);

struct Certificate {
  Eigen::Matrix4d P;    // common Lyapunov matrix, P > 0, trace normalized
  double margin = 0.0;  // smallest |lambda_max| over the vertex inequalities
};

enum class LyapunovStatus {
  Found,
  Infeasible,        // not found within the iteration budget
  NonHurwitzVertex,  // necessary condition fails at a vertex
};

struct LyapunovResult {
  LyapunovStatus status = LyapunovStatus::Infeasible;
  Certificate certificate;
  int bad_vertex = -1; // index of the non-Hurwitz vertex, when applicable
  int iterations = 0;
};

// Searches for a common quadratic Lyapunov certificate by alternating
// projections between the semidefinite cones and the affine constraint
// Q_i = A_i'P + PA_i, warm-started from the Lyapunov equation of the
// average vertex matrix. Failure means "not found", not an infeasibility
// proof.
LyapunovResult find_common_lyapunov(const std::vector<Eigen::Matrix4d>& vertices,
                                    double tolerance = 1e-7,
                                    int max_iterations = 10000);

// Re-verify a certificate by direct eigenvalue computation, independent of
// the search path.
bool certificate_valid(const std::vector<Eigen::Matrix4d>& vertices,
                       const Eigen::Matrix4d& P, double tolerance = 1e-7);

struct SweepCell {
  double gain1 = 0.0;
  double gain2 = 0.0;
  bool feasible = false;
  double margin = 0.0;
};

using ProblemBuilder =
    std::function<std::vector<Eigen::Matrix4d>(double, double)>;

std::vector<SweepCell> stability_sweep(const std::vector<double>& gains1,
                                       const std::vector<double>& gains2,
                                       const ProblemBuilder& problem,
                                       double tolerance = 1e-7);

void write_sweep_csv(std::ostream& os, const std::vector<SweepCell>& cells);

// --- default analysis problems for the two retraction designs ---

struct GammaDesignBox {
  Interval turn_gain;  // K of the turn-rate law [rad/(m s)]
  Interval wa_tangent; // tangent-plane apparent wind speed [m/s]
  Interval r;          // tether length [m]
};

struct ElevationDesignBox {
  Interval r;              // [m]
  Interval r_dot;          // [m/s]
  Interval elevation_gain; // C of the elevation dynamics [rad/(m s^2)]
  double theta_ref = 1.0;
};

GammaDesignBox default_gamma_box();
ElevationDesignBox default_elevation_box();

// Vertex matrices with parameters entering nonlinearly boxed conservatively
// per composite entry, keeping the count at 2^d.
std::vector<Eigen::Matrix4d> gamma_design_vertices(const GammaDesignBox& box,
                                                   double k_c, double k_theta,
                                                   const ActuatorParams& act);
std::vector<Eigen::Matrix4d> elevation_design_vertices(
    const ElevationDesignBox& box, double k1, double k2,
    const ActuatorParams& act, double gravity);

}  // namespace awe

#endif  // AWE_STABILITY_HPP
