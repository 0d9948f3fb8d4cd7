#include "qcov/majorana.hpp"

#include <cmath>
#include <stdexcept>
#include <unsupported/Eigen/MatrixFunctions>

namespace qcov {

namespace {

int degree_of(const Vector& coeffs) {
  double maxabs = coeffs.cwiseAbs().maxCoeff();
  if (maxabs <= 0.0) throw std::invalid_argument("zero polynomial");
  int deg = 0;
  for (int k = 0; k < coeffs.size(); ++k)
    if (std::abs(coeffs(k)) > 1e-12 * maxabs) deg = k;
  return deg;
}

Eigen::Vector3d lift_to_sphere(Complex z) {
  double x = z.real(), y = z.imag(), n2 = std::norm(z);
  return Eigen::Vector3d(2.0 * x, 2.0 * y, 1.0 - n2) / (1.0 + n2);
}

}  // namespace

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

SpinState make_spin_state(int two_j, Vector amps) {
  if (two_j < 0 || amps.size() != two_j + 1)
    throw std::invalid_argument("make_spin_state: amplitude length must be 2j+1");
  require_finite(amps);
  double n = amps.norm();
  if (n < 1e-14) throw std::invalid_argument("make_spin_state: zero vector");
  return SpinState{two_j, amps / n};
}

Matrix spin_matrix(int two_j, SpinAxis axis) {
  const int n = two_j + 1;
  const double j = two_j / 2.0;
  Matrix jz = Matrix::Zero(n, n), jplus = Matrix::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    double m = k - j;
    jz(k, k) = m;
    if (k + 1 < n) jplus(k + 1, k) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  switch (axis) {
    case SpinAxis::Z: return jz;
    case SpinAxis::X: return (jplus + jplus.adjoint()) / 2.0;
    case SpinAxis::Y: return (jplus - jplus.adjoint()) / Complex(0.0, 2.0);
  }
  throw std::invalid_argument("spin_matrix: bad axis");
}

MajoranaPolynomial state_to_polynomial(const SpinState& s) {
  Vector coeffs(s.two_j + 1);
  for (int k = 0; k <= s.two_j; ++k)
    coeffs(k) = std::sqrt(binomial(s.two_j, k)) * s.amps(k);
  return MajoranaPolynomial{s.two_j, std::move(coeffs)};
}

SpinState polynomial_to_state(const MajoranaPolynomial& p) {
  if (p.coeffs.size() != p.two_j + 1)
    throw std::invalid_argument("polynomial_to_state: coefficient length must be 2j+1");
  if (p.coeffs.cwiseAbs().maxCoeff() <= 0.0)
    throw std::invalid_argument("polynomial_to_state: zero polynomial");
  Vector amps(p.two_j + 1);
  for (int k = 0; k <= p.two_j; ++k) amps(k) = p.coeffs(k) / std::sqrt(binomial(p.two_j, k));
  amps /= amps.norm();
  // Fix the global phase: largest-magnitude amplitude real positive.
  int imax = 0;
  for (int k = 1; k <= p.two_j; ++k)
    if (std::abs(amps(k)) > std::abs(amps(imax))) imax = k;
  amps *= std::abs(amps(imax)) / amps(imax);
  return SpinState{p.two_j, std::move(amps)};
}

Constellation roots(const MajoranaPolynomial& p) {
  const int deg = degree_of(p.coeffs);
  Constellation c;
  c.two_j = p.two_j;
  c.roots_at_infinity = p.two_j - deg;
  if (deg > 0) {
    // Companion matrix of the monic polynomial.
    Matrix comp = Matrix::Zero(deg, deg);
    for (int k = 1; k < deg; ++k) comp(k, k - 1) = 1.0;
    for (int k = 0; k < deg; ++k) comp(k, deg - 1) = -p.coeffs(k) / p.coeffs(deg);
    Eigen::ComplexEigenSolver<Matrix> solver(comp);
    if (solver.info() != Eigen::Success)
      throw std::runtime_error("roots: eigensolver failed");
    for (int k = 0; k < deg; ++k) c.points.push_back(lift_to_sphere(solver.eigenvalues()(k)));
  }
  for (int k = 0; k < c.roots_at_infinity; ++k) c.points.emplace_back(0.0, 0.0, -1.0);
  return c;
}

double dispersion(const SpinState& s) {
  const double j = s.two_j / 2.0;
  double mean_sq = 0.0;
  for (SpinAxis axis : {SpinAxis::X, SpinAxis::Y, SpinAxis::Z}) {
    Complex mean = (s.amps.adjoint() * spin_matrix(s.two_j, axis) * s.amps).value();
    mean_sq += mean.real() * mean.real();
  }
  return j * (j + 1) - mean_sq;
}

SpinState su2_action(const SpinState& s, Generator g, Complex xi) {
  const int n = s.two_j + 1;
  Matrix jz = spin_matrix(s.two_j, SpinAxis::Z);
  Matrix jplus = Matrix::Zero(n, n);
  const double j = s.two_j / 2.0;
  for (int k = 0; k + 1 < n; ++k) {
    double m = k - j;
    jplus(k + 1, k) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  Matrix gen;
  switch (g) {
    case Generator::Jz: gen = jz; break;
    case Generator::JPlus: gen = jplus; break;
    case Generator::JMinus: gen = jplus.adjoint(); break;
  }
  Matrix flow = (xi * gen).exp();
  return make_spin_state(s.two_j, flow * s.amps);
}

Complex overlap_from_polynomials(const MajoranaPolynomial& p, const MajoranaPolynomial& q) {
  if (p.two_j != q.two_j) throw std::invalid_argument("overlap_from_polynomials: j mismatch");
  Complex acc = 0.0;
  for (int k = 0; k <= p.two_j; ++k)
    acc += p.coeffs(k) * std::conj(q.coeffs(k)) / binomial(p.two_j, k);
  return acc;
}

std::vector<CatalogEntry> max_dispersion_catalog(int two_j) {
  auto entry = [&](Vector coeffs, std::string geometry) {
    MajoranaPolynomial p{two_j, std::move(coeffs)};
    double d = dispersion(polynomial_to_state(p));
    return CatalogEntry{std::move(p), std::move(geometry), d};
  };
  switch (two_j) {
    case 2: {
      Vector c(3);
      c << 1, 0, 1;  // z^2 + 1: antipodal equatorial pair
      return {entry(std::move(c), "antipodal")};
    }
    case 3: {
      Vector c(4);
      c << 1, 0, 0, 1;  // z^3 + 1: equilateral triangle on a great circle
      return {entry(std::move(c), "triangular")};
    }
    case 4: {
      Vector c(5);
      c << 0, 2.0 * std::sqrt(2.0), 0, 0, 1;  // z^4 + 2 sqrt(2) z: tetrahedron
      return {entry(std::move(c), "tetrahedral")};
    }
    case 5: {
      Vector c1(6), c2(6);
      // z^5 + (5/sqrt(3)) z: apex at the North pole, four points at equal
      // latitude.
      c1 << 0, 5.0 / std::sqrt(3.0), 0, 0, 0, 1;
      // z^4 + z: North pole, South pole (root at infinity) and an
      // equatorial equilateral triangle.
      c2 << 0, 1, 0, 0, 1, 0;
      return {entry(std::move(c1), "pyramidal"),
              entry(std::move(c2), "polar-pair-plus-equatorial-triangle")};
    }
    default:
      throw std::invalid_argument("max_dispersion_catalog: unsupported j");
  }
}

}  // namespace qcov
