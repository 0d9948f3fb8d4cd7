#pragma once

#include <string>
#include <vector>

#include "qcov/qmat.hpp"

// Symmetric spin-j states as degree-2j polynomials and root constellations
// on the sphere, SU(2) flows on them, and the rotation-invariant total-spin
// dispersion.
//
// Half-integer spins are carried as two_j = 2j. Amplitude vectors are
// indexed k = 0..2j with m = k - j (ascending m), so the polynomial
// coefficient of z^k is sqrt(C(2j,k)) * psi_{m=k-j}.

namespace qcov {

struct SpinState {
  int two_j;
  Vector amps;  // length 2j+1, unit norm
};
SpinState make_spin_state(int two_j, Vector amps);  // normalizes, checks nonzero

struct MajoranaPolynomial {
  int two_j;
  Vector coeffs;  // a_0..a_{2j}, coefficient of z^k at index k
};

struct Constellation {
  int two_j;
  std::vector<Eigen::Vector3d> points;  // unit vectors, with multiplicity
  int roots_at_infinity;                // degree deficit, mapped to the South pole
};

MajoranaPolynomial state_to_polynomial(const SpinState& s);
// Inverse map; normalizes and fixes the global phase by making the
// largest-magnitude amplitude real positive.
SpinState polynomial_to_state(const MajoranaPolynomial& p);

// Roots via companion-matrix eigenvalues, lifted to the sphere by inverse
// stereographic projection z = x+iy -> (2x, 2y, 1-|z|^2)/(1+|z|^2);
// z = 0 is the North pole, infinity the South pole.
Constellation roots(const MajoranaPolynomial& p);

// j(j+1) - |<J>|^2.
double dispersion(const SpinState& s);

enum class Generator { Jz, JPlus, JMinus };

// exp(xi * J_g) applied in the spin-j representation, renormalized.
SpinState su2_action(const SpinState& s, Generator g, Complex xi);

// <q|p> evaluated from polynomial coefficients:
// sum_k a_k conj(a'_k) / C(2j,k). Equals the amplitude inner product.
Complex overlap_from_polynomials(const MajoranaPolynomial& p, const MajoranaPolynomial& q);

struct CatalogEntry {
  MajoranaPolynomial poly;
  std::string geometry;
  double dispersion;
};
// The maximum-dispersion configurations for j in {1, 3/2, 2, 5/2}; every
// entry attains dispersion j(j+1).
std::vector<CatalogEntry> max_dispersion_catalog(int two_j);

enum class SpinAxis { X, Y, Z };
Matrix spin_matrix(int two_j, SpinAxis axis);

double binomial(int n, int k);

}  // namespace qcov
