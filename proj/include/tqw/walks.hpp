#pragma once

// One time step of each walk (regular, honeycomb, triangular), the
// encoding/decoding maps, and the triangular<->honeycomb equivalence check.

#include <random>
#include <utility>

#include "tqw/lattice.hpp"
#include "tqw/spin_algebra.hpp"

namespace tqw {

enum class WalkKind { Regular, Honeycomb, Triangular };

struct StepOperator {
  WalkKind kind = WalkKind::Regular;
  WalkParams params;
  Mat2 coin_c;  // exp(-i eps m sigma_z), regular walk only
  Mat2 had;
  Mat2 h1;
  Mat2 w;
  std::array<Mat2, 3> u;

  static StepOperator make(WalkKind kind, WalkParams p) {
    StepOperator op;
    op.kind = kind;
    op.params = p;
    op.had = basis_change(Axis::X);
    op.h1 = basis_change(Axis::Y);
    op.w = coin_W(p);
    for (int i = 0; i < 3; ++i) op.u[i] = coin_U(i);
    const double phi = p.eps * p.mass;
    op.coin_c = Mat2::Zero();
    op.coin_c(0, 0) = std::polar(1.0, -phi);
    op.coin_c(1, 1) = std::polar(1.0, phi);
    return op;
  }
};

inline void apply_coin(BravaisField& f, const Mat2& m) {
  for (auto& v : f.data) v = m * v;
}

// C H T1 H H1 T2 H1+, applied right to left. T1 shifts along x, T2 along y.
inline BravaisField regular_step(const BravaisField& field, const StepOperator& op) {
  assert(field.basis == Basis::Rectangular && op.kind == WalkKind::Regular);
  BravaisField f = field;
  apply_coin(f, op.h1.adjoint());
  f = partial_shift(f, 1);
  apply_coin(f, op.had * op.h1);
  f = partial_shift(f, 0);
  apply_coin(f, op.coin_c * op.had);
  return f;
}

// W T2 W T1 W T0 on the encoded field; one step spans duration eps.
inline BravaisField honeycomb_step(const BravaisField& field, const StepOperator& op) {
  assert(field.basis == Basis::TriangularBravais && op.kind == WalkKind::Honeycomb);
  BravaisField f = field;
  for (int i = 0; i < 3; ++i) {
    f = partial_shift(f, i);
    apply_coin(f, op.w);
  }
  return f;
}

// Rotate every triangle, then apply W at every edge.
inline TriangularField triangular_step(const TriangularField& field,
                                       const StepOperator& op) {
  assert(op.kind == WalkKind::Triangular);
  TriangularField f = rotate_triangles(field);
  for (auto& e : f.edges)
    for (auto& v : e) v = op.w * v;
  return f;
}

// psi~ = U0 psi on hexagon sites.
inline BravaisField encode(const BravaisField& f) {
  BravaisField out = f;
  apply_coin(out, coin_U(0));
  return out;
}
inline BravaisField decode(const BravaisField& f) {
  BravaisField out = f;
  apply_coin(out, coin_U(0).adjoint());
  return out;
}

// psi~(v,k) = U_k psi(v,k) on triangle edges.
inline TriangularField encode(const TriangularField& f) {
  TriangularField out = f;
  for (int k = 0; k < 3; ++k) {
    const Mat2 u = coin_U(k);
    for (auto& v : out.edges[k]) v = u * v;
  }
  return out;
}
inline TriangularField decode(const TriangularField& f) {
  TriangularField out = f;
  for (int k = 0; k < 3; ++k) {
    const Mat2 u = coin_U(k).adjoint();
    for (auto& v : out.edges[k]) v = u * v;
  }
  return out;
}

// Embedding of the k=0 edge sublattice as a honeycomb Bravais field: edge
// midpoints form a triangular-Bravais lattice of spacing (sqrt3/2)*eps.
inline BravaisField embed_edge0(const TriangularField& f) {
  BravaisField out(f.shape, std::sqrt(3.0) / 2.0 * f.spacing,
                   Basis::TriangularBravais);
  out.data = f.edges[0];
  return out;
}

// Three triangular steps on k=0-supported data against one honeycomb step
// under the fixed embedding; returns the max pointwise deviation over
// `trials` random fields.
inline double triangular_honeycomb_equivalence(GridShape shape, WalkParams p,
                                               int trials,
                                               std::uint64_t seed = 7) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const StepOperator tri_op = StepOperator::make(WalkKind::Triangular, p);
  const StepOperator hex_op = StepOperator::make(WalkKind::Honeycomb, p);

  double worst = 0;
  for (int t = 0; t < trials; ++t) {
    TriangularField tf(shape, p.eps);
    for (auto& v : tf.edges[0]) v = Spinor(cplx(gauss(rng), gauss(rng)), cplx(gauss(rng), gauss(rng)));
    const double n = tf.norm();
    for (auto& v : tf.edges[0]) v /= n;

    BravaisField hex = embed_edge0(tf);
    hex = honeycomb_step(hex, hex_op);

    TriangularField evolved = tf;
    for (int s = 0; s < 3; ++s) evolved = triangular_step(evolved, tri_op);

    for (int idx = 0; idx < shape.sites(); ++idx) {
      worst = std::max(worst, (evolved.edges[0][idx] - hex.data[idx]).cwiseAbs().maxCoeff());
      // support must stay on k=0 edges after a full cycle
      worst = std::max(worst, evolved.edges[1][idx].cwiseAbs().maxCoeff());
      worst = std::max(worst, evolved.edges[2][idx].cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

}  // namespace tqw
