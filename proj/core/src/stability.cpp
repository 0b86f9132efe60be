#include "awe/stability.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

namespace awe {

Eigen::Matrix4d build_acl_gamma(double turn_gain, double wa_tangent, double r,
                                double k_theta, double k_c,
                                const ActuatorParams& act) {
  const double a = wa_tangent / r;
  const double w2 = act.omega_cl * act.omega_cl;
  Eigen::Matrix4d m;
  m << k_theta * a, -a, 0.0, 0.0,
       k_theta * k_theta * a, -k_theta * a, -turn_gain * act.k_delta, 0.0,
       0.0, 0.0, 0.0, 1.0,
       0.0, k_c * w2, -w2, -2.0 * act.zeta_cl * act.omega_cl;
  return m;
}

Eigen::Matrix4d build_acl_elevation(double r, double r_dot, double elevation_gain,
                                    double theta_ref, double k1, double k2,
                                    const ActuatorParams& act, double gravity) {
  const double w2 = act.omega_cl * act.omega_cl;
  Eigen::Matrix4d m;
  m << 0.0, 1.0, 0.0, 0.0,
       gravity * std::sin(theta_ref) / r, -2.0 * r_dot / r,
       -elevation_gain * act.k_delta, 0.0,
       0.0, 0.0, 0.0, 1.0,
       -w2 * k1, -w2 * k2, -w2, -2.0 * act.zeta_cl * act.omega_cl;
  return m;
}

std::vector<Eigen::Matrix4d> enumerate_vertices(const ParamBox& box,
                                                const VertexBuilder& builder) {
  const std::size_t d = box.dims.size();
  std::vector<Eigen::Matrix4d> out;
  std::vector<double> point(d);
  const std::size_t corners = std::size_t{1} << d;
  for (std::size_t mask = 0; mask < corners; ++mask) {
    for (std::size_t k = 0; k < d; ++k) {
      point[k] = (mask >> k) & 1 ? box.dims[k].hi : box.dims[k].lo;
    }
    Eigen::Matrix4d m = builder(point);
    bool duplicate = false;
    for (const auto& seen : out) {
      if ((seen - m).norm() <= 1e-14 * (1.0 + seen.norm())) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) out.push_back(m);
  }
  return out;
}

namespace {

constexpr int kDim = 4;
constexpr int kSymDim = kDim * (kDim + 1) / 2;

// Orthonormal basis of symmetric 4x4 matrices (Frobenius isometry).
const std::vector<Eigen::Matrix4d>& sym_basis() {
  static const std::vector<Eigen::Matrix4d> basis = [] {
    std::vector<Eigen::Matrix4d> b;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < kDim; ++i) {
      for (int j = i; j < kDim; ++j) {
        Eigen::Matrix4d e = Eigen::Matrix4d::Zero();
        if (i == j) {
          e(i, i) = 1.0;
        } else {
          e(i, j) = e(j, i) = inv_sqrt2;
        }
        b.push_back(e);
      }
    }
    return b;
  }();
  return basis;
}

Eigen::Matrix<double, kSymDim, 1> to_coords(const Eigen::Matrix4d& m) {
  Eigen::Matrix<double, kSymDim, 1> c;
  const auto& basis = sym_basis();
  for (int k = 0; k < kSymDim; ++k) c(k) = (m.array() * basis[k].array()).sum();
  return c;
}

Eigen::Matrix4d from_coords(const Eigen::Matrix<double, kSymDim, 1>& c) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  const auto& basis = sym_basis();
  for (int k = 0; k < kSymDim; ++k) m += c(k) * basis[k];
  return m;
}

Eigen::Matrix4d lyapunov_map(const Eigen::Matrix4d& a, const Eigen::Matrix4d& p) {
  return a.transpose() * p + p * a;
}

// Eigenvalue clamping projections onto the shifted semidefinite cones.
Eigen::Matrix4d project_min_eig(const Eigen::Matrix4d& m, double floor) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(m);
  Eigen::Vector4d ev = es.eigenvalues().cwiseMax(floor);
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().transpose();
}

Eigen::Matrix4d project_max_eig(const Eigen::Matrix4d& m, double ceiling) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(m);
  Eigen::Vector4d ev = es.eigenvalues().cwiseMin(ceiling);
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().transpose();
}

bool is_hurwitz(const Eigen::Matrix4d& a) {
  const Eigen::EigenSolver<Eigen::Matrix4d> es(a);
  return (es.eigenvalues().real().array() < 0.0).all();
}

// Solve A'P + PA = -I for the average vertex matrix (warm start).
Eigen::Matrix4d lyapunov_warm_start(const std::vector<Eigen::Matrix4d>& vertices) {
  Eigen::Matrix4d mean = Eigen::Matrix4d::Zero();
  for (const auto& a : vertices) mean += a;
  mean /= static_cast<double>(vertices.size());

  // vec(A'P + PA) as a 16x16 operator on vec(P), column-major.
  Eigen::Matrix<double, 16, 16> op = Eigen::Matrix<double, 16, 16>::Zero();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      for (int k = 0; k < 4; ++k) {
        op(i + 4 * j, k + 4 * j) += mean(k, i); // A'P term
        op(i + 4 * j, i + 4 * k) += mean(k, j); // PA term
      }
    }
  }
  Eigen::Matrix<double, 16, 1> rhs;
  const Eigen::Matrix4d minus_i = -Eigen::Matrix4d::Identity();
  rhs = Eigen::Map<const Eigen::Matrix<double, 16, 1>>(minus_i.data());

  const Eigen::Matrix<double, 16, 1> sol = op.fullPivLu().solve(rhs);
  Eigen::Matrix4d p = Eigen::Map<const Eigen::Matrix4d>(sol.data());
  return 0.5 * (p + p.transpose());
}

// Diagonal similarity compressing the actuator rate state. Its stiffness
// shows up as the omega^2 entry feeding the last state; without rescaling
// the fast actuator dynamics dominate the projection metric and the
// alternating projections stall short of the tolerance.
Eigen::Vector4d balancing_scales(const std::vector<Eigen::Matrix4d>& vertices) {
  Eigen::Matrix4d mean = Eigen::Matrix4d::Zero();
  for (const auto& a : vertices) mean += a;
  mean /= static_cast<double>(vertices.size());

  Eigen::Vector4d d = Eigen::Vector4d::Ones();
  const double stiffness = std::abs(mean(kDim - 1, kDim - 2));
  if (stiffness > 1.0) d(kDim - 1) = 1.0 / std::sqrt(stiffness);
  return d;
}

}  // namespace

bool certificate_valid(const std::vector<Eigen::Matrix4d>& vertices,
                       const Eigen::Matrix4d& P, double tolerance) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> esp(P);
  if (esp.eigenvalues().minCoeff() <= tolerance) return false;
  for (const auto& a : vertices) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> esq(lyapunov_map(a, P));
    if (esq.eigenvalues().maxCoeff() >= -tolerance) return false;
  }
  return true;
}

LyapunovResult find_common_lyapunov(const std::vector<Eigen::Matrix4d>& vertices,
                                    double tolerance, int max_iterations) {
  LyapunovResult result;

  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!is_hurwitz(vertices[i])) {
      result.status = LyapunovStatus::NonHurwitzVertex;
      result.bad_vertex = static_cast<int>(i);
      return result;
    }
  }

  const int nv = static_cast<int>(vertices.size());

  // Run the search in balanced coordinates x' = Dx: a certificate P' for
  // A' = D A D^-1 maps back to P = D P' D for the original vertices.
  const Eigen::Vector4d d = balancing_scales(vertices);
  const Eigen::Matrix4d scale = d.asDiagonal();
  const Eigen::Matrix4d scale_inv = d.cwiseInverse().asDiagonal();
  std::vector<Eigen::Matrix4d> balanced;
  balanced.reserve(vertices.size());
  for (const auto& a : vertices) balanced.push_back(scale * a * scale_inv);

  // Least-squares projection onto the graph {(P, L_1(P), ..., L_nv(P))}:
  // stack the identity map and the Lyapunov maps in the symmetric basis.
  Eigen::MatrixXd stacked(kSymDim * (nv + 1), kSymDim);
  const auto& basis = sym_basis();
  for (int k = 0; k < kSymDim; ++k) {
    stacked.block(0, k, kSymDim, 1) = to_coords(basis[k]);
    for (int i = 0; i < nv; ++i) {
      stacked.block(kSymDim * (i + 1), k, kSymDim, 1) =
          to_coords(lyapunov_map(balanced[i], basis[k]));
    }
  }
  const Eigen::LDLT<Eigen::MatrixXd> normal(stacked.transpose() * stacked);

  Eigen::Matrix4d p = lyapunov_warm_start(balanced);

  // Acceptance is checked on the original vertices, so a returned
  // certificate always passes the independent eigenvalue verification.
  auto evaluate = [&](const Eigen::Matrix4d& cand, double& min_eig_p,
                      double& worst_qmax, double& min_abs_qmax) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> esp(cand);
    min_eig_p = esp.eigenvalues().minCoeff();
    worst_qmax = -std::numeric_limits<double>::infinity();
    min_abs_qmax = std::numeric_limits<double>::infinity();
    for (const auto& a : vertices) {
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> esq(lyapunov_map(a, cand));
      const double qmax = esq.eigenvalues().maxCoeff();
      worst_qmax = std::max(worst_qmax, qmax);
      min_abs_qmax = std::min(min_abs_qmax, std::abs(qmax));
    }
  };

  for (int it = 0; it < max_iterations; ++it) {
    // Keep the cone condition scale-free.
    const double tr = p.trace();
    if (!(tr > 1e-12)) {
      p = Eigen::Matrix4d::Identity();
    } else {
      p *= static_cast<double>(kDim) / tr;
    }

    Eigen::Matrix4d p_orig = scale * p * scale;
    p_orig *= static_cast<double>(kDim) / p_orig.trace();
    double min_eig_p, worst_qmax, min_abs_qmax;
    evaluate(p_orig, min_eig_p, worst_qmax, min_abs_qmax);
    if (min_eig_p > tolerance && worst_qmax < -tolerance) {
      result.status = LyapunovStatus::Found;
      result.certificate.P = p_orig;
      result.certificate.margin = min_abs_qmax;
      result.iterations = it;
      return result;
    }

    // Project onto the cones, aiming slightly inside the feasible set.
    const double depth = 100.0 * tolerance;
    const Eigen::Matrix4d p_cone = project_min_eig(p, depth);
    Eigen::VectorXd target(kSymDim * (nv + 1));
    target.head(kSymDim) = to_coords(p_cone);
    for (int i = 0; i < nv; ++i) {
      const Eigen::Matrix4d q_cone =
          project_max_eig(lyapunov_map(balanced[i], p), -depth);
      target.segment(kSymDim * (i + 1), kSymDim) = to_coords(q_cone);
    }

    const Eigen::VectorXd coords = normal.solve(stacked.transpose() * target);
    p = from_coords(coords);
    result.iterations = it + 1;
  }

  result.status = LyapunovStatus::Infeasible;
  return result;
}

std::vector<SweepCell> stability_sweep(const std::vector<double>& gains1,
                                       const std::vector<double>& gains2,
                                       const ProblemBuilder& problem,
                                       double tolerance) {
  std::vector<SweepCell> cells;
  cells.reserve(gains1.size() * gains2.size());
  for (double g1 : gains1) {
    for (double g2 : gains2) {
      const auto vertices = problem(g1, g2);
      const LyapunovResult res = find_common_lyapunov(vertices, tolerance);
      SweepCell cell;
      cell.gain1 = g1;
      cell.gain2 = g2;
      cell.feasible = res.status == LyapunovStatus::Found;
      cell.margin = cell.feasible ? res.certificate.margin : 0.0;
      cells.push_back(cell);
    }
  }
  return cells;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepCell>& cells) {
  os << "gain1,gain2,feasible,margin\n";
  for (const auto& c : cells) {
    os << c.gain1 << ',' << c.gain2 << ',' << (c.feasible ? 1 : 0) << ','
       << c.margin << '\n';
  }
}

GammaDesignBox default_gamma_box() {
  // Turn-rate gain box spans half to twice its value at a 5 m/s apparent
  // wind with the default wing.
  return {{1.88, 7.52}, {2.0, 8.0}, {50.0, 150.0}};
}

ElevationDesignBox default_elevation_box() {
  // Elevation gain evaluated across wind 4-6 m/s and the reel-in range,
  // keeping part of its 1/r correlation with the tether-length interval.
  return {{50.0, 150.0}, {-3.5, -1.5}, {0.17, 0.55}, 1.0};
}

std::vector<Eigen::Matrix4d> gamma_design_vertices(const GammaDesignBox& box,
                                                   double k_c, double k_theta,
                                                   const ActuatorParams& act) {
  // The matrix is affine in (wa/r, K); box the ratio conservatively.
  ParamBox pb;
  pb.dims = {{box.wa_tangent.lo / box.r.hi, box.wa_tangent.hi / box.r.lo},
             box.turn_gain};
  return enumerate_vertices(pb, [&](const std::vector<double>& v) {
    // v[0] = wa/r composite; pass it with r = 1.
    return build_acl_gamma(v[1], v[0], 1.0, k_theta, k_c, act);
  });
}

std::vector<Eigen::Matrix4d> elevation_design_vertices(
    const ElevationDesignBox& box, double k1, double k2,
    const ActuatorParams& act, double gravity) {
  // Affine in (g sin(theta_ref)/r, -2 r_dot/r, C); box each entry.
  const double gs = gravity * std::sin(box.theta_ref);
  const double damp_a = -2.0 * box.r_dot.lo / box.r.lo;
  const double damp_b = -2.0 * box.r_dot.hi / box.r.hi;
  ParamBox pb;
  pb.dims = {{gs / box.r.hi, gs / box.r.lo},
             {std::min(damp_a, damp_b), std::max(damp_a, damp_b)},
             box.elevation_gain};
  return enumerate_vertices(pb, [&](const std::vector<double>& v) {
    Eigen::Matrix4d m = build_acl_elevation(1.0, 0.0, v[2], 0.0, k1, k2, act, 0.0);
    m(1, 0) = v[0];
    m(1, 1) = v[1];
    return m;
  });
}

}  // namespace awe
