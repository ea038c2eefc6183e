#include <catch2/catch_amalgamated.hpp>

#include "tqw/spin_algebra.hpp"

using namespace tqw;

TEST_CASE("pauli matrices") {
  Mat2 x, z;
  x << 0, 1, 1, 0;
  z << 1, 0, 0, -1;
  CHECK(max_abs_diff(pauli(Axis::X), x) == 0.0);
  CHECK(max_abs_diff(pauli(Axis::Z), z) == 0.0);
  CHECK(max_abs_diff(pauli_y() * pauli_y(), Mat2::Identity()) == 0.0);
  for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
    CHECK(unitarity_error(pauli(a)) < 1e-15);
    CHECK(std::abs(pauli(a).trace()) < 1e-15);
    CHECK(max_abs_diff(pauli(a), pauli(a).adjoint()) < 1e-15);
  }
}

TEST_CASE("basis changes conjugate sigma_z into sigma_x and sigma_y") {
  const double r = 1.0 / std::sqrt(2.0);
  Mat2 h_expect;
  h_expect << r, r, r, -r;
  CHECK(max_abs_diff(basis_change(Axis::X), h_expect) < 1e-15);
  Mat2 h1_expect;
  h1_expect << r, r, cplx(0, r), cplx(0, -r);
  CHECK(max_abs_diff(basis_change(Axis::Y), h1_expect) < 1e-15);

  const Mat2 h = basis_change(Axis::X);
  const Mat2 h1 = basis_change(Axis::Y);
  CHECK(max_abs_diff(h * pauli_z() * h, pauli_x()) < 1e-15);
  CHECK(max_abs_diff(h1 * pauli_z() * h1.adjoint(), pauli_y()) < 1e-15);
  CHECK(unitarity_error(h) < 1e-15);
  CHECK(unitarity_error(h1) < 1e-15);
}

TEST_CASE("tau family") {
  const Mat2 t0_expect = (2.0 / 3.0) * pauli_x() + kXi * pauli_z();
  CHECK(max_abs_diff(tau(0, +1), t0_expect) < 1e-15);

  Mat2 sum = Mat2::Zero();
  for (int i = 0; i < 3; ++i) sum += tau(i, +1);
  CHECK(max_abs_diff(sum, std::sqrt(5.0) * pauli_z()) < 1e-15);

  Eigen::SelfAdjointEigenSolver<Mat2> es(tau(1));
  CHECK(es.eigenvalues()(0) == Catch::Approx(-1.0).margin(1e-12));
  CHECK(es.eigenvalues()(1) == Catch::Approx(1.0).margin(1e-12));

  for (int i = 0; i < 3; ++i) {
    const BlochVector n = tau_bloch(i);
    CHECK(n.nx * n.nx + n.ny * n.ny + n.nz * n.nz == Catch::Approx(1.0).margin(1e-12));
    CHECK(max_abs_diff(tau(i, -1), tau(i, +1) - 2 * kXi * pauli_z()) < 1e-15);
  }
}

TEST_CASE("coin rotations diagonalize the taus") {
  CHECK(coin_angle() == Catch::Approx(0.72973).margin(1e-5));
  for (int i = 0; i < 3; ++i) {
    CHECK(max_abs_diff(coin_U(i) * tau(i) * coin_U(i).adjoint(), pauli_z()) < 1e-12);
    CHECK(unitarity_error(coin_U(i)) < 1e-12);
  }
}

TEST_CASE("step phase") {
  const Mat2 s = step_phase_S();
  CHECK(max_abs_diff(s * s * s, Mat2::Identity()) < 1e-15);
  // bare spin-1/2 z-rotation acquires a minus sign over a full cycle
  const Mat2 rz = std::polar(1.0, kPi / 3.0) * s;
  CHECK(max_abs_diff(rz * rz * rz, -Mat2::Identity()) < 1e-15);
  CHECK(std::abs(s(0, 1)) == 0.0);
  CHECK(std::abs(s(1, 0)) == 0.0);
  CHECK(std::abs(s(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(std::abs(s(1, 1)) - 1.0) < 1e-15);
}

TEST_CASE("mass matrix") {
  CHECK(max_abs_diff(mass_matrix({0.37, 0.0}), Mat2::Identity()) < 1e-15);
  const Mat2 m = mass_matrix({0.1, 1.0});
  const double phi = 0.1 / std::sqrt(5.0);
  CHECK(std::abs(m(0, 0) - std::polar(1.0, -phi)) < 1e-15);
  CHECK(std::abs(m(1, 1) - std::polar(1.0, phi)) < 1e-15);
  CHECK(std::abs(m.determinant() - 1.0) < 1e-15);
  CHECK(unitarity_error(m) < 1e-15);
}

TEST_CASE("coin W") {
  const WalkParams p{0.05, 0.7};
  const Mat2 w = coin_W(p);
  CHECK(unitarity_error(w) < 1e-12);

  const Mat2 q = coin_U(0) * step_phase_S() * coin_U(0).adjoint();
  for (int i = 0; i < 3; ++i)
    CHECK(max_abs_diff(coin_U((i + 1) % 3) * coin_U(i).adjoint(), q) < 1e-12);

  const Mat2 w0 = coin_W({0.05, 0.0});
  CHECK(max_abs_diff(w0 * w0 * w0, Mat2::Identity()) < 1e-12);

  // U_i+ M U_i = exp(-i eps (m/sqrt5) tau_i), closed form via tau_i^2 = I
  const double phi = p.eps * p.mass / std::sqrt(5.0);
  for (int i = 0; i < 3; ++i) {
    const Mat2 lhs = coin_U(i).adjoint() * mass_matrix(p) * coin_U(i);
    const Mat2 rhs =
        std::cos(phi) * Mat2::Identity() - cplx(0, 1) * std::sin(phi) * tau(i);
    CHECK(max_abs_diff(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("tau conditions have exactly two solutions") {
  const auto sols = solve_tau_conditions(200, 99);
  REQUIRE(sols.size() == 2);
  for (const auto& s : sols) {
    const double xi = s.n[0].nz;
    CHECK(std::abs(std::abs(xi) - kXi) < 1e-8);
    for (int i = 0; i < 3; ++i) {
      const BlochVector ref = tau_bloch(i, xi > 0 ? +1 : -1);
      CHECK(std::abs(s.n[i].nx - ref.nx) < 1e-8);
      CHECK(std::abs(s.n[i].ny - ref.ny) < 1e-8);
      CHECK(std::abs(s.n[i].nz - ref.nz) < 1e-8);
    }
    // C2 residual at the returned solution
    Eigen::Vector3d rx = Eigen::Vector3d::Zero(), ry = Eigen::Vector3d::Zero();
    for (int i = 0; i < 3; ++i) {
      const Eigen::Vector3d n(s.n[i].nx, s.n[i].ny, s.n[i].nz);
      rx += std::cos(2 * kPi * i / 3) * n;
      ry += std::sin(2 * kPi * i / 3) * n;
    }
    CHECK((rx - Eigen::Vector3d(1, 0, 0)).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((ry - Eigen::Vector3d(0, 1, 0)).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("identity suite passes, and catches an injected tau flip") {
  for (const auto& c : identity_suite(false)) {
    INFO(c.name);
    CHECK(c.pass());
  }
  bool c2_failed = false;
  for (const auto& c : identity_suite(true))
    if (!c.pass() && c.name.rfind("C2", 0) == 0) c2_failed = true;
  CHECK(c2_failed);
}
