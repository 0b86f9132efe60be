#ifndef AWE_LQR_HPP
#define AWE_LQR_HPP

#include <Eigen/Dense>
#include <array>

namespace awe {

// Stabilizing solution of A'P + PA - PBR^-1B'P + Q = 0 via the Hamiltonian
// eigenvector method. Throws RiccatiNoConvergence when no stabilizing
// solution exists (e.g. unstabilizable pair).
Eigen::MatrixXd solve_care(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                           const Eigen::MatrixXd& Q, const Eigen::MatrixXd& R);

// LQ gain K with u = -K x; closed loop A - BK is Hurwitz.
Eigen::MatrixXd lqr_gain(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                         const Eigen::MatrixXd& Q, const Eigen::MatrixXd& R);

// Gains [k1, k2] for the two-state elevation error plant
//   d/dt [dtheta, dtheta_dot] = [[0, 1], [g sin(theta_ref)/r, -2 r_dot/r]] x
//                               + [0, -C] u
// with identity state weight and unit input weight.
std::array<double, 2> lq_elevation_gains(double elevation_gain, double r,
                                         double r_dot, double theta_ref,
                                         double gravity);

}  // namespace awe

#endif  // AWE_LQR_HPP
