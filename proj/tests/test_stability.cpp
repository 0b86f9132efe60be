#include "doctest.h"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "awe/stability.hpp"

using namespace awe;

namespace {

bool is_hurwitz(const Eigen::Matrix4d& m) {
  return (Eigen::EigenSolver<Eigen::Matrix4d>(m).eigenvalues().real().array() < 0.0)
      .all();
}

// manual re-verification, independent of certificate_valid
bool verify_by_eigenvalues(const std::vector<Eigen::Matrix4d>& vertices,
                           const Eigen::Matrix4d& P, double tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> esp(P);
  if (esp.eigenvalues().minCoeff() <= tol) return false;
  for (const auto& a : vertices) {
    const Eigen::Matrix4d q = a.transpose() * P + P * a;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> esq(q);
    if (esq.eigenvalues().maxCoeff() >= -tol) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("closed-loop matrix of the velocity-angle design") {
  ActuatorParams act;

  // with zero controller gain the flight block decouples and is nilpotent:
  // eigenvalues {0, 0} plus the actuator pair
  const Eigen::Matrix4d a0 = build_acl_gamma(3.0, 5.0, 100.0, -2.5, 0.0, act);
  const auto ev = Eigen::EigenSolver<Eigen::Matrix4d>(a0).eigenvalues();
  int zero_count = 0, actuator_count = 0;
  const double wd = act.omega_cl * std::sqrt(1.0 - act.zeta_cl * act.zeta_cl);
  for (int i = 0; i < 4; ++i) {
    if (std::abs(ev(i)) < 1e-9) ++zero_count;
    if (std::abs(ev(i).real() + act.zeta_cl * act.omega_cl) < 1e-6 &&
        std::abs(std::abs(ev(i).imag()) - wd) < 1e-6) {
      ++actuator_count;
    }
  }
  CHECK(zero_count == 2);
  CHECK(actuator_count == 2);

  // nominal design point is Hurwitz
  CHECK(is_hurwitz(build_acl_gamma(3.76, 5.0, 100.0, -2.5, 0.28, act)));
}

TEST_CASE("closed-loop matrix of the elevation design") {
  ActuatorParams act;

  // open loop (k1 = k2 = 0, gain 0): saddle with eigenvalues
  // +-sqrt(g sin(theta_ref)/r) at r_dot = 0, plus the actuator pair
  const Eigen::Matrix4d a0 =
      build_acl_elevation(100.0, 0.0, 0.0, 1.0, 0.0, 0.0, act, 9.81);
  const double s = std::sqrt(9.81 * std::sin(1.0) / 100.0);
  const auto ev = Eigen::EigenSolver<Eigen::Matrix4d>(a0).eigenvalues();
  bool found_pos = false, found_neg = false;
  for (int i = 0; i < 4; ++i) {
    if (std::abs(ev(i) - std::complex<double>(s, 0.0)) < 1e-9) found_pos = true;
    if (std::abs(ev(i) - std::complex<double>(-s, 0.0)) < 1e-9) found_neg = true;
  }
  CHECK(found_pos);
  CHECK(found_neg);

  // the reel-in damping enters only at (1,1)
  const Eigen::Matrix4d fast =
      build_acl_elevation(100.0, -2.5, 0.36, 1.0, -1.4, -4.6, act, 9.81);
  const Eigen::Matrix4d slow =
      build_acl_elevation(100.0, 0.0, 0.36, 1.0, -1.4, -4.6, act, 9.81);
  Eigen::Matrix4d diff = fast - slow;
  CHECK(diff(1, 1) == doctest::Approx(2.0 * 2.5 / 100.0));
  diff(1, 1) = 0.0;
  CHECK(diff.norm() < 1e-15);

  // nominal Table-style gains stabilize the design point
  CHECK(is_hurwitz(fast));
}

TEST_CASE("vertex enumeration") {
  auto builder = [](const std::vector<double>& v) {
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    for (std::size_t i = 0; i < v.size(); ++i) m(0, static_cast<int>(i)) = v[i];
    return m;
  };

  ParamBox two;
  two.dims = {{0.0, 1.0}, {2.0, 3.0}};
  CHECK(enumerate_vertices(two, builder).size() == 4);

  ParamBox three;
  three.dims = {{0.0, 1.0}, {2.0, 3.0}, {-1.0, 1.0}};
  CHECK(enumerate_vertices(three, builder).size() == 8);

  // a degenerate interval halves the count
  ParamBox degenerate;
  degenerate.dims = {{0.0, 1.0}, {2.0, 2.0}};
  CHECK(enumerate_vertices(degenerate, builder).size() == 2);
}

TEST_CASE("single stable vertex certifies immediately") {
  std::vector<Eigen::Matrix4d> verts{-Eigen::Matrix4d::Identity()};
  const LyapunovResult res = find_common_lyapunov(verts);
  REQUIRE(res.status == LyapunovStatus::Found);
  CHECK(certificate_valid(verts, res.certificate.P));
  CHECK(verify_by_eigenvalues(verts, res.certificate.P, 1e-7));
}

TEST_CASE("non-Hurwitz vertex short-circuits") {
  Eigen::Matrix4d bad = -Eigen::Matrix4d::Identity();
  bad(0, 0) = 0.5;
  std::vector<Eigen::Matrix4d> verts{-Eigen::Matrix4d::Identity(), bad};
  const LyapunovResult res = find_common_lyapunov(verts);
  CHECK(res.status == LyapunovStatus::NonHurwitzVertex);
  CHECK(res.bad_vertex == 1);
}

TEST_CASE("random Hurwitz families admit a certificate") {
  std::mt19937 rng(7);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 5; ++trial) {
    // common base plus small perturbations: a common certificate exists
    Eigen::Matrix4d base;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) base(i, j) = normal(rng);
    base -= 5.0 * Eigen::Matrix4d::Identity();
    if (!is_hurwitz(base)) continue;

    std::vector<Eigen::Matrix4d> verts;
    for (int k = 0; k < 3; ++k) {
      Eigen::Matrix4d pert;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) pert(i, j) = 0.05 * normal(rng);
      verts.push_back(base + pert);
    }
    const LyapunovResult res = find_common_lyapunov(verts);
    REQUIRE(res.status == LyapunovStatus::Found);
    CHECK(verify_by_eigenvalues(verts, res.certificate.P, 1e-7));
  }
}

TEST_CASE("certificates scale") {
  std::vector<Eigen::Matrix4d> verts{-Eigen::Matrix4d::Identity()};
  const LyapunovResult res = find_common_lyapunov(verts);
  REQUIRE(res.status == LyapunovStatus::Found);
  CHECK(certificate_valid(verts, 10.0 * res.certificate.P));
  CHECK(certificate_valid(verts, 0.1 * res.certificate.P));
}

TEST_CASE("both default design problems certify") {
  ActuatorParams act;

  const auto gv = gamma_design_vertices(default_gamma_box(), 0.28, -2.5, act);
  const LyapunovResult rg = find_common_lyapunov(gv);
  REQUIRE(rg.status == LyapunovStatus::Found);
  CHECK(verify_by_eigenvalues(gv, rg.certificate.P, 1e-7));

  const auto ev = elevation_design_vertices(default_elevation_box(), -1.4, -4.6,
                                            act, 9.81);
  const LyapunovResult re = find_common_lyapunov(ev);
  REQUIRE(re.status == LyapunovStatus::Found);
  CHECK(verify_by_eigenvalues(ev, re.certificate.P, 1e-7));
}

TEST_CASE("zero elevation gains fail the necessary condition") {
  ActuatorParams act;
  const auto ev =
      elevation_design_vertices(default_elevation_box(), 0.0, 0.0, act, 9.81);
  const LyapunovResult res = find_common_lyapunov(ev);
  CHECK(res.status == LyapunovStatus::NonHurwitzVertex);
  CHECK(res.bad_vertex >= 0);
}

TEST_CASE("stability sweep marks feasible and infeasible gain pairs") {
  ActuatorParams act;
  auto problem = [&](double k1, double k2) {
    return elevation_design_vertices(default_elevation_box(), k1, k2, act, 9.81);
  };
  const auto cells = stability_sweep({0.0, -1.4}, {0.0, -4.6}, problem);
  REQUIRE(cells.size() == 4);
  // (0, 0) infeasible, the design pair feasible
  for (const auto& c : cells) {
    if (c.gain1 == 0.0 && c.gain2 == 0.0) CHECK_FALSE(c.feasible);
    if (c.gain1 == -1.4 && c.gain2 == -4.6) {
      CHECK(c.feasible);
      CHECK(c.margin > 0.0);
    }
  }
}
