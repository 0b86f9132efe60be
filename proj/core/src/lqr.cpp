#include "awe/lqr.hpp"

#include <Eigen/Eigenvalues>

#include "awe/errors.hpp"

namespace awe {

Eigen::MatrixXd solve_care(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                           const Eigen::MatrixXd& Q, const Eigen::MatrixXd& R) {
  const Eigen::Index n = A.rows();
  const Eigen::MatrixXd Rinv = R.inverse();

  Eigen::MatrixXd H(2 * n, 2 * n);
  H.topLeftCorner(n, n) = A;
  H.topRightCorner(n, n) = -B * Rinv * B.transpose();
  H.bottomLeftCorner(n, n) = -Q;
  H.bottomRightCorner(n, n) = -A.transpose();

  Eigen::EigenSolver<Eigen::MatrixXd> es(H);
  if (es.info() != Eigen::Success) {
    throw RiccatiNoConvergence("Hamiltonian eigendecomposition failed");
  }

  // Stable invariant subspace.
  Eigen::MatrixXcd U(2 * n, n);
  Eigen::Index col = 0;
  for (Eigen::Index i = 0; i < 2 * n && col < n; ++i) {
    if (es.eigenvalues()(i).real() < 0.0) {
      U.col(col++) = es.eigenvectors().col(i);
    }
  }
  if (col != n) {
    throw RiccatiNoConvergence("no n-dimensional stable Hamiltonian subspace");
  }

  const Eigen::MatrixXcd U1 = U.topRows(n);
  const Eigen::MatrixXcd U2 = U.bottomRows(n);
  const Eigen::FullPivLU<Eigen::MatrixXcd> lu(U1);
  if (!lu.isInvertible()) {
    throw RiccatiNoConvergence("singular subspace basis (unstabilizable pair?)");
  }
  Eigen::MatrixXd P = (U2 * lu.inverse()).real();
  P = 0.5 * (P + P.transpose()).eval();

  const Eigen::MatrixXd residual = A.transpose() * P + P * A -
                                   P * B * Rinv * B.transpose() * P + Q;
  if (residual.norm() > 1e-6 * std::max(1.0, P.norm())) {
    throw RiccatiNoConvergence("Riccati residual too large");
  }
  return P;
}

Eigen::MatrixXd lqr_gain(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                         const Eigen::MatrixXd& Q, const Eigen::MatrixXd& R) {
  const Eigen::MatrixXd P = solve_care(A, B, Q, R);
  return R.inverse() * B.transpose() * P;
}

std::array<double, 2> lq_elevation_gains(double elevation_gain, double r,
                                         double r_dot, double theta_ref,
                                         double gravity) {
  if (elevation_gain == 0.0) {
    throw RiccatiNoConvergence("no control authority: elevation gain is zero");
  }
  Eigen::MatrixXd A(2, 2);
  A << 0.0, 1.0, gravity * std::sin(theta_ref) / r, -2.0 * r_dot / r;
  Eigen::MatrixXd B(2, 1);
  B << 0.0, -elevation_gain;
  const Eigen::MatrixXd K =
      lqr_gain(A, B, Eigen::MatrixXd::Identity(2, 2), Eigen::MatrixXd::Identity(1, 1));
  return {K(0, 0), K(0, 1)};
}

}  // namespace awe
