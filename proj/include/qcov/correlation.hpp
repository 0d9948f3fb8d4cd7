#pragma once

#include <span>

#include "qcov/states.hpp"

// The two covariance functionals:
//   cov_rho(A,B)  = tr(rho A B) - tr(rho A) tr(rho B)
//   C_rho(A,B)    = tr([rho,A][B,rho])/2 = tr(rho^2 {A,B}/2 - rho A rho B)
// plus the variance forms and the inequality audit built on them.

namespace qcov {

Complex cov(const DensityMatrix& rho, const Matrix& a, const Matrix& b);

// Both algebraic forms are evaluated and cross-checked internally.
Complex alt_cov(const DensityMatrix& rho, const Matrix& a, const Matrix& b);

double variance(const DensityMatrix& rho, const Matrix& a);      // cov(A,A), a Hermitian
double alt_variance(const DensityMatrix& rho, const Matrix& a);  // tr([a,rho][a,rho]^dag)/2

struct CovarianceReport {
  Complex cov;
  Complex alt_cov;
  double var_a;
  double var_b;
  double alt_var_a;
  double alt_var_b;
};
CovarianceReport report(const DensityMatrix& rho, const Matrix& a, const Matrix& b);

struct InequalityAudit {
  double var_product;       // var(A) var(B)
  double cov_sq;            // |cov(A,B)|^2
  double alt_var_product;   // C(A,A^dag) C(B,B^dag)
  double alt_cov_sq;        // |C(A,B^dag)|^2
  double heisenberg;        // |tr(rho [A,B])|^2 / 4
  bool var_cov_ok;          // var_product >= cov_sq
  bool alt_ok;              // alt_var_product >= alt_cov_sq
  bool var_ge_alt_var_a;    // var(A) >= C(A,A)
  bool var_ge_alt_var_b;
  bool heisenberg_ok;       // var_product >= heisenberg
};
// Slack tolerance on every inequality is 1e-9.
InequalityAudit inequality_audit(const DensityMatrix& rho, const Matrix& a, const Matrix& b);

// tr([A1,rho][A2,rho]...[A_{2k+1},rho]) for a pure rho; vanishes
// identically. Throws on even-length lists and non-pure states.
Complex odd_commutator_trace(const DensityMatrix& rho, std::span<const Matrix> ops);

}  // namespace qcov
