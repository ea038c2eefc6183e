#pragma once

// Wave packets, error norms, momentum-space walk operators, dispersion
// extraction, and the convergence-order sweeps against the spectral
// Dirac reference.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "tqw/dirac_reference.hpp"
#include "tqw/lattice.hpp"
#include "tqw/walks.hpp"

namespace tqw {

struct PacketSpec {
  Eigen::Vector2d k0 = Eigen::Vector2d::Zero();  // carrier wavevector
  double sigma = 8.0;                            // Gaussian width, lattice units
  enum class Branch { PositiveEnergy, UpSpinor } branch = Branch::PositiveEnergy;
};

inline Spinor branch_spinor(const Eigen::Vector2d& k, const DiracParams& dp,
                            PacketSpec::Branch branch) {
  if (branch == PacketSpec::Branch::UpSpinor) return Spinor(1, 0);
  const Mat2 h = dirac_hamiltonian(k, dp);
  const double w = dispersion(k, dp).first;
  if (w < 1e-14) return Spinor(1, 0);
  Eigen::SelfAdjointEigenSolver<Mat2> es(h);
  Spinor v = es.eigenvectors().col(1);  // ascending order: col 1 is +w
  // deterministic phase: largest component real positive
  const int lead = std::abs(v(0)) >= std::abs(v(1)) ? 0 : 1;
  v *= std::polar(1.0, -std::arg(v(lead)));
  return v;
}

// Gaussian-enveloped plane wave built mode-by-mode in Fourier space
// (inherently periodic), normalized to 1.
inline BravaisField make_packet(GridShape shape, double spacing, Basis basis,
                                const PacketSpec& spec, const DiracParams& dp) {
  if (spec.sigma < 4.0)
    throw std::invalid_argument("packet sigma must be >= 4 lattice units");
  const double sig_phys = spec.sigma * spacing;
  FourierModeSet ms{shape, basis, spacing, {}};
  ms.modes.resize(shape.sites());
  for (int m1 = 0; m1 < shape.n1; ++m1)
    for (int m2 = 0; m2 < shape.n2; ++m2) {
      const Eigen::Vector2d k = ms.wavevector(m1, m2);
      const double amp =
          std::exp(-0.5 * sig_phys * sig_phys * (k - spec.k0).squaredNorm());
      ms.modes[m1 * shape.n2 + m2] = amp * branch_spinor(k, dp, spec.branch);
    }
  BravaisField f = inverse_transform(ms);
  const double n = f.norm();
  if (n == 0.0) throw std::invalid_argument("empty packet");
  for (auto& v : f.data) v /= n;
  return f;
}

// Triangular variant: the packet lives on the k=0 edge midpoints (a Bravais
// lattice of spacing (sqrt3/2)*eps), already encoded with U_0.
inline TriangularField make_triangular_packet(GridShape shape, double eps,
                                              const PacketSpec& spec,
                                              const DiracParams& dp) {
  const BravaisField p = make_packet(shape, std::sqrt(3.0) / 2.0 * eps,
                                     Basis::TriangularBravais, spec, dp);
  TriangularField f(shape, eps);
  const Mat2 u0 = coin_U(0);
  for (int idx = 0; idx < shape.sites(); ++idx) f.edges[0][idx] = u0 * p.data[idx];
  return f;
}

// Fraction of spectral weight outside the central half of the Brillouin zone.
inline double spectral_weight_outside_half_bz(const BravaisField& f) {
  FourierModeSet ms = forward_transform(f);
  double inside = 0, total = 0;
  for (int m1 = 0; m1 < f.shape.n1; ++m1)
    for (int m2 = 0; m2 < f.shape.n2; ++m2) {
      const double w = ms.modes[m1 * f.shape.n2 + m2].squaredNorm();
      total += w;
      if (std::abs(centered_mode(m1, f.shape.n1)) <= f.shape.n1 / 4 &&
          std::abs(centered_mode(m2, f.shape.n2)) <= f.shape.n2 / 4)
        inside += w;
    }
  return total == 0 ? 0 : (total - inside) / total;
}

inline double l2_error(const BravaisField& a, const BravaisField& b) {
  if (a.shape.n1 != b.shape.n1 || a.shape.n2 != b.shape.n2)
    throw std::invalid_argument("l2_error: shape mismatch");
  double s = 0;
  for (int idx = 0; idx < a.shape.sites(); ++idx)
    s += (a.data[idx] - b.data[idx]).squaredNorm();
  return std::sqrt(s);
}

// --- momentum-space one-step operators -------------------------------------

inline Mat2 spin_shift_phase(const Eigen::Vector2d& k, double eps,
                             const Eigen::Vector2d& u) {
  Mat2 d = Mat2::Zero();
  d(0, 0) = std::polar(1.0, -eps * k.dot(u));
  d(1, 1) = std::polar(1.0, eps * k.dot(u));
  return d;
}

// 2x2 one-step operator at wavevector k. For the triangular walk this is the
// 3-step, k=0-edge-restricted block: the honeycomb operator on the embedded
// lattice of spacing (sqrt3/2)*eps.
inline Mat2 momentum_step(WalkKind kind, const WalkParams& p,
                          const Eigen::Vector2d& k) {
  const StepOperator op = StepOperator::make(kind, p);
  switch (kind) {
    case WalkKind::Regular: {
      return op.coin_c * op.had * spin_shift_phase(k, p.eps, {1, 0}) * op.had *
             op.h1 * spin_shift_phase(k, p.eps, {0, 1}) * op.h1.adjoint();
    }
    case WalkKind::Honeycomb: {
      Mat2 b = Mat2::Identity();
      for (int i = 0; i < 3; ++i) b = op.w * spin_shift_phase(k, p.eps, unit_u(i)) * b;
      return b;
    }
    case WalkKind::Triangular: {
      const double eps_h = std::sqrt(3.0) / 2.0 * p.eps;
      Mat2 b = Mat2::Identity();
      for (int i = 0; i < 3; ++i) b = op.w * spin_shift_phase(k, eps_h, unit_u(i)) * b;
      return b;
    }
  }
  return Mat2::Identity();
}

struct DispersionRow {
  Eigen::Vector2d k;
  double theta_plus = 0;   // eigenphase of the +energy branch, ~ -eps*omega
  double theta_minus = 0;  // ~ +eps*omega
  double omega_plus = 0;
  double omega_minus = 0;
};

// Eigenphases of the one-step operator, principal branch, paired with the
// continuum dispersion of the walk's effective Dirac parameters.
inline std::vector<DispersionRow> walk_dispersion(
    WalkKind kind, const WalkParams& p, const std::vector<Eigen::Vector2d>& kgrid) {
  // Continuum parameters of the per-step generator: theta_± ~ -+eps*omega(k).
  // Triangular 3-step block: shifts span (sqrt3/2)*eps while the mass leg
  // spans eps, hence c_eff = sqrt3/2 at unit time step.
  const DiracParams dp{p.mass,
                       kind == WalkKind::Triangular ? std::sqrt(3.0) / 2.0 : 1.0};
  std::vector<DispersionRow> rows;
  rows.reserve(kgrid.size());
  for (const auto& k : kgrid) {
    const Mat2 b = momentum_step(kind, p, k);
    Eigen::ComplexEigenSolver<Mat2> es(b);
    double p0 = std::arg(es.eigenvalues()(0));
    double p1 = std::arg(es.eigenvalues()(1));
    if (p0 > p1) std::swap(p0, p1);
    DispersionRow r;
    r.k = k;
    r.theta_plus = p0;
    r.theta_minus = p1;
    const auto [wp, wm] = dispersion(k, dp);
    r.omega_plus = wp;
    r.omega_minus = wm;
    rows.push_back(r);
  }
  return rows;
}

// --- convergence sweep ------------------------------------------------------

struct ConvergenceRow {
  double eps = 0;
  double l2 = 0;
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;  // eps strictly decreasing
  double fitted_order = 0;
  double fit_residual = 0;
};

inline void fit_order(ConvergenceReport& rep) {
  const int n = int(rep.rows.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : rep.rows) {
    const double x = std::log(r.eps);
    const double y = std::log(std::max(r.l2, 1e-300));
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double icpt = (sy - slope * sx) / n;
  double res = 0;
  for (const auto& r : rep.rows) {
    const double d = std::log(std::max(r.l2, 1e-300)) - (slope * std::log(r.eps) + icpt);
    res += d * d;
  }
  rep.fitted_order = slope;
  rep.fit_residual = std::sqrt(res / n);
}

// Evolves a wave packet with the walk for physical time T at each eps, against
// the spectral Dirac reference, and fits the order of the l2 error in eps.
//
// The packet's physical extent is held fixed across the sweep: spec.sigma is
// read in lattice units at the coarsest eps. Decoding is applied before every
// error measurement.
//
// Bookkeeping per walk (steps must divide T exactly):
//   regular/honeycomb: T/eps steps, reference (c_eff=1, mass m) for time T.
//   triangular: 3*(T/eps) steps (walk time 3T), reference (c_eff=sqrt3/6,
//   mass m/3) for time 3T on the embedded lattice of spacing (sqrt3/2)*eps.
inline ConvergenceReport convergence_sweep(WalkKind walk, double T, double m,
                                           std::vector<double> eps_list,
                                           GridShape shape, PacketSpec spec) {
  std::sort(eps_list.begin(), eps_list.end(), std::greater<>());
  const double eps_max = eps_list.front();

  ConvergenceReport rep;
  for (const double eps : eps_list) {
    const double steps_d = T / eps;
    const long nsteps = std::lround(steps_d);
    if (std::abs(steps_d - double(nsteps)) > 1e-9 || nsteps < 1)
      throw std::invalid_argument("T/eps must be a positive integer");

    PacketSpec s = spec;
    s.sigma = spec.sigma * eps_max / eps;  // fixed physical width
    const WalkParams wp{eps, m};

    double err = 0;
    if (walk == WalkKind::Regular || walk == WalkKind::Honeycomb) {
      const Basis basis = walk == WalkKind::Regular ? Basis::Rectangular
                                                    : Basis::TriangularBravais;
      const DiracParams dp{m, 1.0};
      const BravaisField packet = make_packet(shape, eps, basis, s, dp);
      const StepOperator op = StepOperator::make(walk, wp);
      BravaisField f = walk == WalkKind::Honeycomb ? encode(packet) : packet;
      for (long i = 0; i < nsteps; ++i)
        f = walk == WalkKind::Honeycomb ? honeycomb_step(f, op) : regular_step(f, op);
      if (walk == WalkKind::Honeycomb) f = decode(f);
      err = l2_error(f, dirac_evolve(packet, T, dp));
    } else {
      const DiracParams dp{m / 3.0, std::sqrt(3.0) / 6.0};
      const BravaisField packet = make_packet(shape, std::sqrt(3.0) / 2.0 * eps,
                                              Basis::TriangularBravais, s, dp);
      TriangularField f(shape, eps);
      const Mat2 u0 = coin_U(0);
      for (int idx = 0; idx < shape.sites(); ++idx)
        f.edges[0][idx] = u0 * packet.data[idx];
      const StepOperator op = StepOperator::make(WalkKind::Triangular, wp);
      for (long i = 0; i < 3 * nsteps; ++i) f = triangular_step(f, op);
      BravaisField out = embed_edge0(f);
      apply_coin(out, u0.adjoint());
      err = l2_error(out, dirac_evolve(packet, 3.0 * T, dp));
    }
    rep.rows.push_back({eps, err});
  }
  fit_order(rep);
  return rep;
}

}  // namespace tqw
