#pragma once

// Exact spectral evolution of the (2+1)-D Dirac equation on the walk's own
// reciprocal lattice, plus the analytic dispersion relation.

#include <fftw3.h>

#include <utility>
#include <vector>

#include "tqw/lattice.hpp"
#include "tqw/spin_algebra.hpp"

namespace tqw {

struct DiracParams {
  double mass = 0.0;
  double c_eff = 1.0;  // sqrt(3)/6 for the unrescaled triangular bookkeeping
};

// Reciprocal basis g1, g2 with g_i . (eps a_j) = 2 pi delta_ij.
inline std::array<Eigen::Vector2d, 2> reciprocal_basis(Basis b, double spacing) {
  const auto a = basis_vectors(b);
  Eigen::Matrix2d A;
  A.col(0) = spacing * a[0];
  A.col(1) = spacing * a[1];
  const Eigen::Matrix2d G = 2.0 * kPi * A.inverse().transpose();
  return {Eigen::Vector2d(G.col(0)), Eigen::Vector2d(G.col(1))};
}

inline int centered_mode(int m, int n) { return m <= n / 2 ? m : m - n; }

// Wavevector of DFT mode (m1, m2) on an n1 x n2 field.
inline Eigen::Vector2d mode_wavevector(const GridShape& s, Basis b, double spacing,
                                       int m1, int m2) {
  const auto g = reciprocal_basis(b, spacing);
  return (double(centered_mode(m1, s.n1)) / s.n1) * g[0] +
         (double(centered_mode(m2, s.n2)) / s.n2) * g[1];
}

inline std::pair<double, double> dispersion(const Eigen::Vector2d& k,
                                            const DiracParams& dp) {
  const double w = std::sqrt(dp.c_eff * dp.c_eff * k.squaredNorm() +
                             dp.mass * dp.mass);
  return {w, -w};
}

inline Mat2 dirac_hamiltonian(const Eigen::Vector2d& k, const DiracParams& dp) {
  return dp.c_eff * (k.x() * pauli_x() + k.y() * pauli_y()) + dp.mass * pauli_z();
}

// exp(-i t H(k)) in closed form: cos(w t) I - i sin(w t)/w H(k).
inline Mat2 dirac_propagator(const Eigen::Vector2d& k, double t,
                             const DiracParams& dp) {
  const double w = dispersion(k, dp).first;
  if (w == 0.0) return Mat2::Identity();
  return std::cos(w * t) * Mat2::Identity() -
         cplx(0, 1) * (std::sin(w * t) / w) * dirac_hamiltonian(k, dp);
}

// In-place 2D DFT of an n1 x n2 row-major complex array; sign -1 forward.
inline void fft2(std::vector<cplx>& a, const GridShape& s, int sign) {
  fftw_plan plan = fftw_plan_dft_2d(
      s.n1, s.n2, reinterpret_cast<fftw_complex*>(a.data()),
      reinterpret_cast<fftw_complex*>(a.data()),
      sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
}

// Per-mode spinor amplitudes of a Bravais field. Convention:
// psi(i,j) = (1/(n1 n2)) sum_m psihat(m) exp(+i k(m).r(i,j)).
struct FourierModeSet {
  GridShape shape;
  Basis basis = Basis::Rectangular;
  double spacing = 1.0;
  std::vector<Spinor> modes;

  Eigen::Vector2d wavevector(int m1, int m2) const {
    return mode_wavevector(shape, basis, spacing, m1, m2);
  }
};

inline FourierModeSet forward_transform(const BravaisField& f) {
  FourierModeSet ms{f.shape, f.basis, f.spacing, {}};
  std::vector<cplx> up(f.shape.sites()), dn(f.shape.sites());
  for (int idx = 0; idx < f.shape.sites(); ++idx) {
    up[idx] = f.data[idx](0);
    dn[idx] = f.data[idx](1);
  }
  fft2(up, f.shape, -1);
  fft2(dn, f.shape, -1);
  ms.modes.resize(f.shape.sites());
  for (int idx = 0; idx < f.shape.sites(); ++idx) ms.modes[idx] = Spinor(up[idx], dn[idx]);
  return ms;
}

inline BravaisField inverse_transform(const FourierModeSet& ms) {
  BravaisField f(ms.shape, ms.spacing, ms.basis);
  std::vector<cplx> up(ms.shape.sites()), dn(ms.shape.sites());
  for (int idx = 0; idx < ms.shape.sites(); ++idx) {
    up[idx] = ms.modes[idx](0);
    dn[idx] = ms.modes[idx](1);
  }
  fft2(up, ms.shape, +1);
  fft2(dn, ms.shape, +1);
  const double scale = 1.0 / ms.shape.sites();
  for (int idx = 0; idx < ms.shape.sites(); ++idx)
    f.data[idx] = scale * Spinor(up[idx], dn[idx]);
  return f;
}

// Exact continuum evolution sampled at lattice sites.
inline BravaisField dirac_evolve(const BravaisField& f, double t,
                                 const DiracParams& dp) {
  FourierModeSet ms = forward_transform(f);
  for (int m1 = 0; m1 < f.shape.n1; ++m1)
    for (int m2 = 0; m2 < f.shape.n2; ++m2) {
      Spinor& v = ms.modes[m1 * f.shape.n2 + m2];
      v = dirac_propagator(ms.wavevector(m1, m2), t, dp) * v;
    }
  return inverse_transform(ms);
}

}  // namespace tqw
