#pragma once

#include <complex>
#include <random>
#include <vector>

#include "qcov/states.hpp"

// Seeded random generators and naive loop-based oracles. The oracles
// deliberately avoid the library's Eigen-backed evaluation paths: traces,
// products and reductions are written out index by index over flat arrays.

namespace qtest {

using qcov::Complex;
using qcov::Matrix;
using qcov::Vector;

inline Matrix random_matrix(std::mt19937_64& rng, int d) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Matrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = Complex(dist(rng), dist(rng));
  return m;
}

inline Matrix random_hermitian(std::mt19937_64& rng, int d) {
  Matrix m = random_matrix(rng, d);
  return (m + m.adjoint()) / 2.0;
}

inline Matrix random_unitary(std::mt19937_64& rng, int d) {
  return qcov::expm_i(random_hermitian(rng, d));
}

inline Vector random_pure(std::mt19937_64& rng, int d) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Vector v(d);
  for (int i = 0; i < d; ++i) v(i) = Complex(dist(rng), dist(rng));
  return v / v.norm();
}

inline Matrix random_density_mat(std::mt19937_64& rng, int d) {
  Matrix g = random_matrix(rng, d);
  Matrix m = g * g.adjoint();
  return m / m.trace().real();
}

// ---- naive oracles on flat row-major arrays ----

using Flat = std::vector<Complex>;

inline Flat to_flat(const Matrix& m) {
  Flat out(m.rows() * m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[i * m.cols() + j] = m(i, j);
  return out;
}

inline Flat flat_mul(const Flat& a, const Flat& b, int n) {
  Flat out(n * n, Complex(0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) out[i * n + j] += a[i * n + k] * b[k * n + j];
  return out;
}

inline Complex flat_trace(const Flat& a, int n) {
  Complex t = 0;
  for (int i = 0; i < n; ++i) t += a[i * n + i];
  return t;
}

// tr(rho a b) - tr(rho a) tr(rho b)
inline Complex oracle_cov(const Matrix& rho, const Matrix& a, const Matrix& b) {
  const int n = static_cast<int>(rho.rows());
  Flat r = to_flat(rho), fa = to_flat(a), fb = to_flat(b);
  return flat_trace(flat_mul(r, flat_mul(fa, fb, n), n), n) -
         flat_trace(flat_mul(r, fa, n), n) * flat_trace(flat_mul(r, fb, n), n);
}

// tr(rho^2 {a,b}/2 - rho a rho b)
inline Complex oracle_alt_cov(const Matrix& rho, const Matrix& a, const Matrix& b) {
  const int n = static_cast<int>(rho.rows());
  Flat r = to_flat(rho), fa = to_flat(a), fb = to_flat(b);
  Flat r2 = flat_mul(r, r, n);
  Flat ab = flat_mul(fa, fb, n), ba = flat_mul(fb, fa, n);
  Flat anti(n * n);
  for (int i = 0; i < n * n; ++i) anti[i] = (ab[i] + ba[i]) / 2.0;
  return flat_trace(flat_mul(r2, anti, n), n) -
         flat_trace(flat_mul(flat_mul(r, fa, n), flat_mul(r, fb, n), n), n);
}

// Reduced matrix by direct index summation.
inline Matrix oracle_partial_trace(const Matrix& m, int d1, int d2, bool trace_first) {
  if (trace_first) {
    Matrix out = Matrix::Zero(d2, d2);
    for (int k = 0; k < d2; ++k)
      for (int l = 0; l < d2; ++l)
        for (int i = 0; i < d1; ++i) out(k, l) += m(i * d2 + k, i * d2 + l);
    return out;
  }
  Matrix out = Matrix::Zero(d1, d1);
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d1; ++j)
      for (int k = 0; k < d2; ++k) out(i, j) += m(i * d2 + k, j * d2 + k);
  return out;
}

inline Matrix oracle_outer(const Vector& v) {
  Matrix out(v.size(), v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i)
    for (Eigen::Index j = 0; j < v.size(); ++j) out(i, j) = v(i) * std::conj(v(j));
  return out;
}

// Best |cov| over Schmidt-aligned pure states of a 2 (x) 3 system under the
// equal-weight eigenvalue sets {-1, 1} and {e^{2pi i/3}, e^{4pi i/3}, 1}:
// exhaustive over the slot pairings and a step-sized grid over the Schmidt
// weight. Only |c_ij|^2 enters the covariance of diagonal operators, so
// phases drop out.
inline double oracle_unequal_dims_grid(double step = 0.01) {
  const Complex a_eig[2] = {Complex(-1.0, 0.0), Complex(1.0, 0.0)};
  Complex b_eig[3];
  for (int k = 0; k < 3; ++k)
    b_eig[k] = std::exp(Complex(0.0, 2.0 * 3.14159265358979323846 * (k + 1) / 3));
  double best = 0.0;
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2) {
      if (i1 == i2) continue;
      for (int j1 = 0; j1 < 3; ++j1)
        for (int j2 = 0; j2 < 3; ++j2) {
          if (j1 == j2) continue;
          for (double p = 0.0; p <= 1.0 + 1e-12; p += step) {
            double q = 1.0 - p;
            Complex mean_ab = p * a_eig[i1] * b_eig[j1] + q * a_eig[i2] * b_eig[j2];
            Complex mean_a = p * a_eig[i1] + q * a_eig[i2];
            Complex mean_b = p * b_eig[j1] + q * b_eig[j2];
            best = std::max(best, std::abs(mean_ab - mean_a * mean_b));
          }
        }
    }
  return best;
}

}  // namespace qtest
