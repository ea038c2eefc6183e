#pragma once

// 2x2 spin algebra for the trivalent-lattice Dirac walks: Pauli matrices,
// the tau family and its diagonalizing rotations, the step phase S, the
// mass matrix M and the coin W, plus a multi-start root finder that checks
// that the tau matrices are the only solutions of the defining conditions.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace tqw {

using cplx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Spinor = Eigen::Vector2cd;

inline constexpr double kPi = std::numbers::pi;

// Bloch z-component shared by all three tau matrices.
inline const double kXi = std::sqrt(5.0) / 3.0;

struct WalkParams {
  double eps = 0.1;   // lattice spacing and time step
  double mass = 0.0;  // particle mass, units hbar = c = 1
};

enum class Axis { X, Y, Z };

inline Mat2 pauli(Axis a) {
  Mat2 m;
  switch (a) {
    case Axis::X: m << 0, 1, 1, 0; break;
    case Axis::Y: m << 0, cplx(0, -1), cplx(0, 1), 0; break;
    case Axis::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

inline Mat2 pauli_x() { return pauli(Axis::X); }
inline Mat2 pauli_y() { return pauli(Axis::Y); }
inline Mat2 pauli_z() { return pauli(Axis::Z); }

// H for X (Hadamard), H1 for Y; both conjugate sigma_z into the named axis.
inline Mat2 basis_change(Axis a) {
  const double r = 1.0 / std::sqrt(2.0);
  Mat2 m;
  if (a == Axis::X) {
    m << r, r, r, -r;
  } else {
    m << r, r, cplx(0, r), cplx(0, -r);
  }
  return m;
}

struct BlochVector {
  double nx = 0, ny = 0, nz = 0;
};

inline Mat2 bloch_matrix(const BlochVector& n) {
  return n.nx * pauli_x() + n.ny * pauli_y() + n.nz * pauli_z();
}

inline BlochVector tau_bloch(int i, int xi_sign = +1) {
  const double a = 2.0 * kPi * i / 3.0;
  return {(2.0 / 3.0) * std::cos(a), (2.0 / 3.0) * std::sin(a),
          xi_sign * kXi};
}

inline Mat2 tau(int i, int xi_sign = +1) { return bloch_matrix(tau_bloch(i, xi_sign)); }

// Rotation angle bringing tau_0 onto sigma_z.
inline double coin_angle() { return std::acos(std::sqrt(5.0) / 3.0); }

// Step phase: phased z-rotation by -2*pi/3 with S^3 = I exactly.
inline Mat2 step_phase_S() {
  Mat2 s = Mat2::Zero();
  s(0, 0) = 1.0;
  s(1, 1) = std::polar(1.0, -2.0 * kPi / 3.0);
  return s;
}

inline Mat2 coin_U(int i) {
  const double h = coin_angle() / 2.0;
  Mat2 u0;
  u0 << std::cos(h), std::sin(h), -std::sin(h), std::cos(h);
  Mat2 u = u0;
  const Mat2 s = step_phase_S();
  for (int j = 0; j < i; ++j) u = u * s;
  return u;
}

// M = exp(-i eps (m/sqrt(5)) sigma_z). Sum over the three coin legs then
// yields exactly -i eps m sigma_z to first order, since sum tau_i = sqrt(5) sigma_z.
inline Mat2 mass_matrix(const WalkParams& p) {
  const double phi = p.eps * p.mass / std::sqrt(5.0);
  Mat2 m = Mat2::Zero();
  m(0, 0) = std::polar(1.0, -phi);
  m(1, 1) = std::polar(1.0, phi);
  return m;
}

inline Mat2 coin_W(const WalkParams& p) {
  const Mat2 u0 = coin_U(0);
  return u0 * step_phase_S() * u0.adjoint() * mass_matrix(p);
}

inline double max_abs_diff(const Mat2& a, const Mat2& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline double unitarity_error(const Mat2& m) {
  return max_abs_diff(m.adjoint() * m, Mat2::Identity());
}

// --- tau uniqueness oracle -------------------------------------------------

struct TauTriple {
  std::array<BlochVector, 3> n;
};

// Solves the 9-unknown system: |n_i| = 1 (C1) and
// sum_i cos(2 pi i/3) n_i = e_x, sum_i sin(2 pi i/3) n_i = e_y (C2),
// by damped Newton from `starts` random unit-vector triples.
// Solutions are deduplicated at 1e-6 componentwise distance.
inline std::vector<TauTriple> solve_tau_conditions(int starts = 1000,
                                                   std::uint64_t seed = 12345) {
  using Vec9 = Eigen::Matrix<double, 9, 1>;
  using Mat9 = Eigen::Matrix<double, 9, 9>;

  const std::array<double, 3> cs = {1.0, -0.5, -0.5};
  const std::array<double, 3> sn = {0.0, std::sqrt(3.0) / 2.0, -std::sqrt(3.0) / 2.0};

  auto residual = [&](const Vec9& x) {
    Vec9 f = Vec9::Zero();
    for (int c = 0; c < 3; ++c) {
      for (int i = 0; i < 3; ++i) {
        f(c) += cs[i] * x(3 * i + c);
        f(3 + c) += sn[i] * x(3 * i + c);
      }
    }
    f(0) -= 1.0;
    f(4) -= 1.0;
    for (int i = 0; i < 3; ++i)
      f(6 + i) = x.segment<3>(3 * i).squaredNorm() - 1.0;
    return f;
  };
  auto jacobian = [&](const Vec9& x) {
    Mat9 j = Mat9::Zero();
    for (int c = 0; c < 3; ++c)
      for (int i = 0; i < 3; ++i) {
        j(c, 3 * i + c) = cs[i];
        j(3 + c, 3 * i + c) = sn[i];
      }
    for (int i = 0; i < 3; ++i)
      j.row(6 + i).segment<3>(3 * i) = 2.0 * x.segment<3>(3 * i).transpose();
    return j;
  };

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  std::vector<Vec9> sols;
  for (int t = 0; t < starts; ++t) {
    Vec9 x;
    for (int i = 0; i < 3; ++i) {
      Eigen::Vector3d v(gauss(rng), gauss(rng), gauss(rng));
      v.normalize();
      x.segment<3>(3 * i) = v;
    }
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      const Vec9 f = residual(x);
      if (f.norm() < 1e-13) {
        converged = true;
        break;
      }
      const Mat9 j = jacobian(x);
      const Vec9 dx = j.fullPivLu().solve(-f);
      double lambda = 1.0;
      const double f0 = f.norm();
      while (lambda > 1e-4 && residual(x + lambda * dx).norm() > f0) lambda *= 0.5;
      x += lambda * dx;
    }
    if (!converged || residual(x).norm() > 1e-11) continue;  // skipped, not fatal
    bool dup = false;
    for (const auto& s : sols)
      if ((s - x).cwiseAbs().maxCoeff() < 1e-6) { dup = true; break; }
    if (!dup) sols.push_back(x);
  }

  std::vector<TauTriple> out;
  for (const auto& s : sols) {
    TauTriple t;
    for (int i = 0; i < 3; ++i)
      t.n[i] = {s(3 * i), s(3 * i + 1), s(3 * i + 2)};
    out.push_back(t);
  }
  return out;
}

// --- identity suite --------------------------------------------------------

struct IdentityCheck {
  std::string name;
  double error = 0;
  double tol = 1e-12;
  bool pass() const { return error <= tol; }
};

// Runs every closed-form identity the construction rests on. `inject_tau_flip`
// negates the sigma_y coefficient of tau_1, a negative control for the C2 checks.
inline std::vector<IdentityCheck> identity_suite(bool inject_tau_flip = false) {
  std::vector<IdentityCheck> checks;
  auto add = [&](std::string name, double err, double tol = 1e-12) {
    checks.push_back({std::move(name), err, tol});
  };

  auto tau_i = [&](int i) {
    Mat2 t = tau(i);
    if (inject_tau_flip && i == 1) {
      BlochVector n = tau_bloch(1);
      n.ny = -n.ny;
      t = bloch_matrix(n);
    }
    return t;
  };

  const Mat2 sx = pauli_x(), sy = pauli_y(), sz = pauli_z();
  const Mat2 s = step_phase_S();
  const WalkParams p{0.05, 1.0};
  const Mat2 w = coin_W(p);

  add("hadamard_conjugation  H sz H = sx",
      max_abs_diff(basis_change(Axis::X) * sz * basis_change(Axis::X), sx));
  add("h1_conjugation        H1 sz H1+ = sy",
      max_abs_diff(basis_change(Axis::Y) * sz * basis_change(Axis::Y).adjoint(), sy));

  for (int i = 0; i < 3; ++i)
    add("C1                    U" + std::to_string(i) + " tau" + std::to_string(i) +
            " U" + std::to_string(i) + "+ = sz",
        max_abs_diff(coin_U(i) * tau_i(i) * coin_U(i).adjoint(), sz));

  Mat2 sum_cos = Mat2::Zero(), sum_sin = Mat2::Zero(), sum_tau = Mat2::Zero();
  for (int i = 0; i < 3; ++i) {
    const double a = 2.0 * kPi * i / 3.0;
    sum_cos += std::cos(a) * tau_i(i);
    sum_sin += std::sin(a) * tau_i(i);
    sum_tau += tau_i(i);
  }
  add("C2x                   sum cos tau_i = sx", max_abs_diff(sum_cos, sx));
  add("C2y                   sum sin tau_i = sy", max_abs_diff(sum_sin, sy));
  add("sum_tau               sum tau_i = sqrt5 sz",
      max_abs_diff(sum_tau, std::sqrt(5.0) * sz));

  add("S_cubed               S^3 = I", max_abs_diff(s * s * s, Mat2::Identity()), 1e-15);
  {
    const Mat2 rz = std::polar(1.0, kPi / 3.0) * s;  // bare spin-1/2 z-rotation
    add("spin_half_sign        Rz(2pi/3)^3 = -I",
        max_abs_diff(rz * rz * rz, -Mat2::Identity()), 1e-15);
  }

  const Mat2 q = coin_U(0) * s * coin_U(0).adjoint();
  for (int i = 0; i < 3; ++i)
    add("coin_independence     U" + std::to_string((i + 1) % 3) + " U" +
            std::to_string(i) + "+ = U0 S U0+",
        max_abs_diff(coin_U((i + 1) % 3) * coin_U(i).adjoint(), q));

  add("W_unitary", unitarity_error(w));
  for (int i = 0; i < 3; ++i) add("U" + std::to_string(i) + "_unitary", unitarity_error(coin_U(i)));
  add("S_unitary", unitarity_error(s));
  add("M_unitary", unitarity_error(mass_matrix(p)));

  {
    const Mat2 w0 = coin_W({0.3, 0.0});
    add("W_cubed_massless      W^3 = I at m=0",
        max_abs_diff(w0 * w0 * w0, Mat2::Identity()));
  }
  {
    // U_i+ M U_i = exp(-i eps (m/sqrt5) tau_i); tau_i^2 = I gives the closed form.
    const double phi = p.eps * p.mass / std::sqrt(5.0);
    double worst = 0;
    for (int i = 0; i < 3; ++i) {
      const Mat2 lhs = coin_U(i).adjoint() * mass_matrix(p) * coin_U(i);
      const Mat2 rhs = std::cos(phi) * Mat2::Identity() -
                       cplx(0, 1) * std::sin(phi) * tau_i(i);
      worst = std::max(worst, max_abs_diff(lhs, rhs));
    }
    add("coin_mass_leg         U_i+ M U_i = exp(-i eps m tau_i / sqrt5)", worst);
  }
  {
    add("mass_matrix_zero      M(m=0) = I",
        max_abs_diff(mass_matrix({0.7, 0.0}), Mat2::Identity()), 1e-15);
  }
  return checks;
}

}  // namespace tqw
