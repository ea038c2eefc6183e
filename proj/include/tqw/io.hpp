#pragma once

// Deterministic serialization of fields, convergence reports, dispersion
// tables and run summaries. Floating point is written with 17 significant
// digits so every value round-trips exactly.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tqw/analysis.hpp"
#include "tqw/lattice.hpp"

namespace tqw {

inline std::string fp(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << content;
}

inline std::string field_csv(const BravaisField& f) {
  std::ostringstream os;
  os << "i,j,re_up,im_up,re_down,im_down\n";
  for (int i = 0; i < f.shape.n1; ++i)
    for (int j = 0; j < f.shape.n2; ++j) {
      const Spinor& v = f.at(i, j);
      os << i << ',' << j << ',' << fp(v(0).real()) << ',' << fp(v(0).imag())
         << ',' << fp(v(1).real()) << ',' << fp(v(1).imag()) << '\n';
    }
  return os.str();
}

inline std::string field_csv(const TriangularField& f) {
  std::ostringstream os;
  os << "i,j,k,re_up,im_up,re_down,im_down\n";
  for (int i = 0; i < f.shape.n1; ++i)
    for (int j = 0; j < f.shape.n2; ++j)
      for (int k = 0; k < 3; ++k) {
        const Spinor& v = f.at(k, i, j);
        os << i << ',' << j << ',' << k << ',' << fp(v(0).real()) << ','
           << fp(v(0).imag()) << ',' << fp(v(1).real()) << ',' << fp(v(1).imag())
           << '\n';
      }
  return os.str();
}

inline std::string report_csv(const ConvergenceReport& rep) {
  std::ostringstream os;
  os << "eps,l2_error\n";
  for (const auto& r : rep.rows) os << fp(r.eps) << ',' << fp(r.l2) << '\n';
  return os.str();
}

inline std::string report_json(const ConvergenceReport& rep) {
  nlohmann::json j;
  j["fitted_order"] = rep.fitted_order;
  j["fit_residual"] = rep.fit_residual;
  return j.dump(2) + "\n";
}

inline std::string dispersion_csv(const std::vector<DispersionRow>& rows) {
  std::ostringstream os;
  os << "kx,ky,theta_plus,theta_minus,omega_continuum_plus,omega_continuum_minus\n";
  for (const auto& r : rows)
    os << fp(r.k.x()) << ',' << fp(r.k.y()) << ',' << fp(r.theta_plus) << ','
       << fp(r.theta_minus) << ',' << fp(r.omega_plus) << ','
       << fp(r.omega_minus) << '\n';
  return os.str();
}

// Circular-statistics mean index along each lattice direction (robust to
// periodic wrap) and the rms spread about it, both in index units.
struct FieldStats {
  double norm = 0;
  double mean_i = 0, mean_j = 0;
  double spread = 0;
};

inline FieldStats field_stats(const BravaisField& f) {
  FieldStats st;
  cplx z1 = 0, z2 = 0;
  double total = 0;
  for (int i = 0; i < f.shape.n1; ++i)
    for (int j = 0; j < f.shape.n2; ++j) {
      const double w = f.at(i, j).squaredNorm();
      total += w;
      z1 += w * std::polar(1.0, 2.0 * kPi * i / f.shape.n1);
      z2 += w * std::polar(1.0, 2.0 * kPi * j / f.shape.n2);
    }
  st.norm = std::sqrt(total);
  if (total == 0) return st;
  // centered anchor in (-n/2, n/2]: a packet straddling index 0 must report a
  // mean near 0, not near n
  st.mean_i = double(std::lround(std::arg(z1) / (2.0 * kPi) * f.shape.n1));
  st.mean_j = double(std::lround(std::arg(z2) / (2.0 * kPi) * f.shape.n2));
  // refine mean and spread with minimal-image displacements about the circular mean
  double si = 0, sj = 0, s2 = 0;
  for (int i = 0; i < f.shape.n1; ++i)
    for (int j = 0; j < f.shape.n2; ++j) {
      const double w = f.at(i, j).squaredNorm() / total;
      double di = i - st.mean_i, dj = j - st.mean_j;
      di -= f.shape.n1 * std::round(di / f.shape.n1);
      dj -= f.shape.n2 * std::round(dj / f.shape.n2);
      si += w * di;
      sj += w * dj;
      s2 += w * (di * di + dj * dj);
    }
  s2 -= si * si + sj * sj;
  st.mean_i += si;
  st.mean_j += sj;
  st.spread = std::sqrt(std::max(0.0, s2));
  return st;
}

inline Eigen::Vector2d stats_position(const BravaisField& f, const FieldStats& st) {
  const auto a = basis_vectors(f.basis);
  return f.spacing * (st.mean_i * a[0] + st.mean_j * a[1]);
}

}  // namespace tqw
