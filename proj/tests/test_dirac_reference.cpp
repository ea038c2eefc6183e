#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tqw/dirac_reference.hpp"

using namespace tqw;

TEST_CASE("propagator closed form") {
  CHECK(max_abs_diff(dirac_propagator({0, 0}, 1.7, {0.0, 1.0}), Mat2::Identity()) <
        1e-15);
  // k=0, m=1, t=pi: cos(pi) I - i sin(pi) sz = -I
  CHECK(max_abs_diff(dirac_propagator({0, 0}, kPi, {1.0, 1.0}), -Mat2::Identity()) <
        1e-14);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int t = 0; t < 20; ++t) {
    const Eigen::Vector2d k(u(rng), u(rng));
    const DiracParams dp{std::abs(u(rng)), 1.0};
    const Mat2 p = dirac_propagator(k, u(rng), dp);
    CHECK(unitarity_error(p) < 1e-14);
    CHECK(std::abs(std::abs(p.determinant()) - 1.0) < 1e-13);
  }

  // group property at the propagator level
  const Eigen::Vector2d k(0.6, -1.1);
  const DiracParams dp{0.8, 1.0};
  CHECK(max_abs_diff(dirac_propagator(k, 0.9, dp),
                     dirac_propagator(k, 0.5, dp) * dirac_propagator(k, 0.4, dp)) <
        1e-13);
}

TEST_CASE("dispersion relation") {
  auto [wp, wm] = dispersion({0, 0}, {2.0, 1.0});
  CHECK(wp == Catch::Approx(2.0));
  CHECK(wm == Catch::Approx(-2.0));
  std::tie(wp, wm) = dispersion({1, 0}, {0.0, 1.0});
  CHECK(wp == Catch::Approx(1.0));
  std::tie(wp, wm) = dispersion({0, 1}, {0.0, std::sqrt(3.0) / 6.0});
  CHECK(wp == Catch::Approx(std::sqrt(3.0) / 6.0));
}

TEST_CASE("spectral evolution") {
  const GridShape s{16, 16};
  std::mt19937_64 rng(9);
  std::normal_distribution<double> g;
  BravaisField f(s, 0.25, Basis::TriangularBravais);
  for (auto& v : f.data) v = Spinor(cplx(g(rng), g(rng)), cplx(g(rng), g(rng)));
  const double n0 = f.norm();
  for (auto& v : f.data) v /= n0;

  const DiracParams dp{0.7, 1.0};

  // t = 0 is the identity
  const BravaisField f0 = dirac_evolve(f, 0.0, dp);
  for (int i = 0; i < s.sites(); ++i)
    CHECK((f0.data[i] - f.data[i]).cwiseAbs().maxCoeff() < 1e-13);

  // norm preservation and the group property
  const BravaisField f1 = dirac_evolve(f, 1.3, dp);
  CHECK(std::abs(f1.norm() - 1.0) < 1e-12);
  const BravaisField f2 = dirac_evolve(dirac_evolve(f, 0.6, dp), 0.7, dp);
  for (int i = 0; i < s.sites(); ++i)
    CHECK((f1.data[i] - f2.data[i]).cwiseAbs().maxCoeff() < 1e-12);

  // Parseval across the transform
  const FourierModeSet ms = forward_transform(f);
  double mode_norm = 0;
  for (const auto& v : ms.modes) mode_norm += v.squaredNorm();
  mode_norm = std::sqrt(mode_norm / s.sites());
  CHECK(std::abs(mode_norm - f.norm()) < 1e-12);
}

TEST_CASE("plane-wave eigenmode picks up exactly exp(-i w t)") {
  const GridShape s{12, 12};
  const double eps = 0.3;
  const DiracParams dp{0.9, 1.0};
  const int m1 = 2, m2 = 9;
  const Eigen::Vector2d k = mode_wavevector(s, Basis::Rectangular, eps, m1, m2);

  Eigen::SelfAdjointEigenSolver<Mat2> es(dirac_hamiltonian(k, dp));
  const Spinor chi = es.eigenvectors().col(1);  // +w branch
  const double w = es.eigenvalues()(1);

  BravaisField f(s, eps, Basis::Rectangular);
  for (int i = 0; i < s.n1; ++i)
    for (int j = 0; j < s.n2; ++j)
      f.at(i, j) = std::polar(1.0, 2.0 * kPi * (double(m1) * i / s.n1 +
                                                double(m2) * j / s.n2)) * chi;

  const double t = 0.8;
  const BravaisField g = dirac_evolve(f, t, dp);
  const cplx phase = std::polar(1.0, -w * t);
  for (int i = 0; i < s.sites(); ++i)
    CHECK((g.data[i] - phase * f.data[i]).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("reciprocal basis is dual to the lattice basis") {
  for (Basis b : {Basis::Rectangular, Basis::TriangularBravais}) {
    const double eps = 0.15;
    const auto a = basis_vectors(b);
    const auto g = reciprocal_basis(b, eps);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        CHECK(g[i].dot(eps * a[j]) ==
              Catch::Approx(i == j ? 2.0 * kPi : 0.0).margin(1e-12));
  }
}
