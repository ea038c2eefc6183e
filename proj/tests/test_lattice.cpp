#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tqw/lattice.hpp"

using namespace tqw;

namespace {

BravaisField random_field(GridShape s, double eps, Basis b, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  BravaisField f(s, eps, b);
  for (auto& v : f.data) v = Spinor(cplx(g(rng), g(rng)), cplx(g(rng), g(rng)));
  return f;
}

TriangularField random_tri_field(GridShape s, double eps, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  TriangularField f(s, eps);
  for (auto& e : f.edges)
    for (auto& v : e) v = Spinor(cplx(g(rng), g(rng)), cplx(g(rng), g(rng)));
  return f;
}

bool identical(const BravaisField& a, const BravaisField& b) {
  for (int i = 0; i < a.shape.sites(); ++i)
    if (a.data[i] != b.data[i]) return false;
  return true;
}

}  // namespace

TEST_CASE("direction vectors sum to zero") {
  CHECK((unit_u(0) + unit_u(1) + unit_u(2)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("rectangular whole-spinor shift") {
  const GridShape s{6, 5};
  BravaisField f(s, 1.0, Basis::Rectangular);
  f.at(0, 0) = Spinor(1, 2);

  BravaisField g = shift_rect(f, 0, +1);
  CHECK(g.at(1, 0) == Spinor(1, 2));
  CHECK(g.at(0, 0) == Spinor::Zero());

  const BravaisField r = random_field(s, 1.0, Basis::Rectangular, 3);
  CHECK(identical(shift_rect(shift_rect(r, 1, +1), 1, -1), r));

  BravaisField w = r;
  for (int i = 0; i < s.n1; ++i) w = shift_rect(w, 0, +1);
  CHECK(identical(w, r));
}

TEST_CASE("partial shift moves components oppositely") {
  const GridShape s{6, 6};
  BravaisField f(s, 0.5, Basis::TriangularBravais);
  f.at(0, 0) = Spinor(1, 0);
  BravaisField g = partial_shift(f, 0);
  CHECK(g.at(1, 0) == Spinor(1, 0));

  BravaisField fd(s, 0.5, Basis::TriangularBravais);
  fd.at(0, 0) = Spinor(0, 1);
  g = partial_shift(fd, 0);
  CHECK(g.at(s.n1 - 1, 0) == Spinor(0, 1));

  // u0+u1+u2 = 0 forces net-zero displacement for the composition
  const BravaisField r = random_field(s, 0.5, Basis::TriangularBravais, 11);
  CHECK(identical(partial_shift(partial_shift(partial_shift(r, 2), 1), 0), r));
}

TEST_CASE("shifts preserve the norm") {
  // permuting the sites only reorders the floating-point sum
  const BravaisField r = random_field({8, 8}, 1.0, Basis::TriangularBravais, 5);
  CHECK(partial_shift(r, 1).norm() == Catch::Approx(r.norm()).epsilon(1e-14));
  const BravaisField q = random_field({8, 8}, 1.0, Basis::Rectangular, 6);
  CHECK(shift_rect(q, 0, -1).norm() == Catch::Approx(q.norm()).epsilon(1e-14));
}

TEST_CASE("position map is affine in the basis") {
  const BravaisField f({8, 8}, 0.25, Basis::TriangularBravais);
  const Eigen::Vector2d d10 = f.position(1, 0) - f.position(0, 0);
  const Eigen::Vector2d d01 = f.position(0, 1) - f.position(0, 0);
  CHECK((d10 - 0.25 * unit_u(0)).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((d01 - 0.25 * unit_u(1)).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((f.position(3, 2) - (3 * d10 + 2 * d01)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("triangle neighbor map is a bijection") {
  const GridShape s{7, 5};
  for (int k = 0; k < 3; ++k) {
    std::vector<int> hit(s.sites(), 0);
    for (int i = 0; i < s.n1; ++i)
      for (int j = 0; j < s.n2; ++j) {
        const auto [wi, wj] = neighbor(s, i, j, k);
        hit[wi * s.n2 + wj]++;
      }
    for (int h : hit) CHECK(h == 1);
  }
}

TEST_CASE("triangle rotation") {
  const GridShape s{6, 6};
  const TriangularField r = random_tri_field(s, 1.0, 17);

  // R^3 = identity, bit-exact (pure permutation)
  TriangularField g = rotate_triangles(rotate_triangles(rotate_triangles(r)));
  for (int k = 0; k < 3; ++k)
    for (int idx = 0; idx < s.sites(); ++idx)
      CHECK(g.edges[k][idx] == r.edges[k][idx]);

  CHECK(rotate_triangles(r).norm() == Catch::Approx(r.norm()).epsilon(1e-14));

  // delta up at side 0 hops to side 1 of the same triangle
  TriangularField d(s, 1.0);
  d.at(0, 2, 3) = Spinor(1, 0);
  const TriangularField rd = rotate_triangles(d);
  CHECK(rd.at(1, 2, 3)(0) == cplx(1, 0));
  CHECK(rd.at(0, 2, 3) == Spinor::Zero());
}
