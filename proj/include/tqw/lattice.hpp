#pragma once

// Periodic spinor fields on the two Bravais bases (rectangular and the
// u0/u1 triangular-Bravais chart) and the edge-indexed triangular field,
// with the spin-dependent partial shifts and the triangle rotation.

#include <array>
#include <cassert>
#include <cmath>
#include <vector>

#include "tqw/spin_algebra.hpp"

namespace tqw {

struct GridShape {
  int n1 = 0;
  int n2 = 0;
  int sites() const { return n1 * n2; }
};

enum class Basis { Rectangular, TriangularBravais };

// Unit vector at angle 2*pi*i/3; u0+u1+u2 = 0.
inline Eigen::Vector2d unit_u(int i) {
  const double a = 2.0 * kPi * i / 3.0;
  return {std::cos(a), std::sin(a)};
}

inline std::array<Eigen::Vector2d, 2> basis_vectors(Basis b) {
  if (b == Basis::Rectangular)
    return {Eigen::Vector2d{1, 0}, Eigen::Vector2d{0, 1}};
  return {unit_u(0), unit_u(1)};
}

struct IndexOffset {
  int di = 0;
  int dj = 0;
};

// Index step realizing a +eps*u_dir displacement on the triangular-Bravais
// chart (a1 = u0, a2 = u1, u2 = -a1-a2).
inline IndexOffset tri_offset(int dir) {
  switch (dir) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    default: return {-1, -1};
  }
}

inline int wrap(int x, int n) { return ((x % n) + n) % n; }

struct BravaisField {
  GridShape shape;
  double spacing = 1.0;
  Basis basis = Basis::Rectangular;
  std::vector<Spinor> data;

  BravaisField() = default;
  BravaisField(GridShape s, double eps, Basis b)
      : shape(s), spacing(eps), basis(b), data(s.sites(), Spinor::Zero()) {}

  Spinor& at(int i, int j) { return data[i * shape.n2 + j]; }
  const Spinor& at(int i, int j) const { return data[i * shape.n2 + j]; }
  Spinor& at_wrapped(int i, int j) {
    return data[wrap(i, shape.n1) * shape.n2 + wrap(j, shape.n2)];
  }
  const Spinor& at_wrapped(int i, int j) const {
    return data[wrap(i, shape.n1) * shape.n2 + wrap(j, shape.n2)];
  }

  Eigen::Vector2d position(int i, int j) const {
    const auto a = basis_vectors(basis);
    return spacing * (double(i) * a[0] + double(j) * a[1]);
  }

  double norm() const {
    double s = 0;
    for (const auto& v : data) s += v.squaredNorm();
    return std::sqrt(s);
  }
};

// Moves every spinor s steps along the axis (0 = first index, 1 = second).
inline BravaisField shift_rect(const BravaisField& f, int axis, int s) {
  assert(f.basis == Basis::Rectangular);
  BravaisField out(f.shape, f.spacing, f.basis);
  const int di = axis == 0 ? s : 0;
  const int dj = axis == 1 ? s : 0;
  for (int i = 0; i < f.shape.n1; ++i)
    for (int j = 0; j < f.shape.n2; ++j)
      out.at(i, j) = f.at_wrapped(i - di, j - dj);
  return out;
}

// Spin-dependent shift: the up component moves by +eps*u_dir, the down
// component by -eps*u_dir. For the rectangular basis dir is the axis (0,1);
// for the triangular-Bravais basis dir is in {0,1,2}.
inline BravaisField partial_shift(const BravaisField& f, int dir) {
  IndexOffset o;
  if (f.basis == Basis::Rectangular) {
    assert(dir == 0 || dir == 1);
    o = dir == 0 ? IndexOffset{1, 0} : IndexOffset{0, 1};
  } else {
    o = tri_offset(dir);
  }
  BravaisField out(f.shape, f.spacing, f.basis);
  for (int i = 0; i < f.shape.n1; ++i)
    for (int j = 0; j < f.shape.n2; ++j) {
      out.at(i, j)(0) = f.at_wrapped(i - o.di, j - o.dj)(0);
      out.at(i, j)(1) = f.at_wrapped(i + o.di, j + o.dj)(1);
    }
  return out;
}

// Three spinor fields psi_k indexed by white-triangle coordinates; the up
// component lies on the white triangle's side k, the down component on the
// adjacent gray triangle's side k.
struct TriangularField {
  GridShape shape;
  double spacing = 1.0;  // triangle edge length
  std::array<std::vector<Spinor>, 3> edges;

  TriangularField() = default;
  TriangularField(GridShape s, double eps) : shape(s), spacing(eps) {
    for (auto& e : edges) e.assign(s.sites(), Spinor::Zero());
  }

  Spinor& at(int k, int i, int j) { return edges[k][i * shape.n2 + j]; }
  const Spinor& at(int k, int i, int j) const { return edges[k][i * shape.n2 + j]; }

  double norm() const {
    double s = 0;
    for (const auto& e : edges)
      for (const auto& v : e) s += v.squaredNorm();
    return std::sqrt(s);
  }
};

// White triangle whose side (k-1) feeds the down component of side k of v
// under the triangle rotation; a translation, hence a bijection per k.
inline IndexOffset neighbor_offset(int k) {
  const IndexOffset e = tri_offset((k + 2) % 3);  // e_{k-1}
  return {2 * e.di, 2 * e.dj};
}

inline std::pair<int, int> neighbor(const GridShape& s, int i, int j, int k) {
  const IndexOffset o = neighbor_offset(k);
  return {wrap(i + o.di, s.n1), wrap(j + o.dj, s.n2)};
}

// Anti-clockwise rotation of every triangle: the component at side k-1 hops
// to side k. Up components rotate within their white triangle; down
// components rotate within their gray triangle, which in white-indexed
// storage is the neighbor gather. Applying three times is the identity.
inline TriangularField rotate_triangles(const TriangularField& f) {
  TriangularField out(f.shape, f.spacing);
  for (int k = 0; k < 3; ++k) {
    const int km1 = (k + 2) % 3;
    for (int i = 0; i < f.shape.n1; ++i)
      for (int j = 0; j < f.shape.n2; ++j) {
        out.at(k, i, j)(0) = f.at(km1, i, j)(0);
        const auto [wi, wj] = neighbor(f.shape, i, j, k);
        out.at(k, i, j)(1) = f.at(km1, wi, wj)(1);
      }
  }
  return out;
}

}  // namespace tqw
