#include "qcov/correlation.hpp"

#include <cmath>
#include <stdexcept>

namespace qcov {

namespace {

void check_dims(const DensityMatrix& rho, const Matrix& a) {
  if (a.rows() != a.cols() || a.rows() != rho.dim())
    throw std::invalid_argument("operator dimension does not match state");
}

}  // namespace

Complex cov(const DensityMatrix& rho, const Matrix& a, const Matrix& b) {
  check_dims(rho, a);
  check_dims(rho, b);
  const Matrix& r = rho.mat();
  return (r * a * b).trace() - (r * a).trace() * (r * b).trace();
}

Complex alt_cov(const DensityMatrix& rho, const Matrix& a, const Matrix& b) {
  check_dims(rho, a);
  check_dims(rho, b);
  const Matrix& r = rho.mat();
  Complex commutator_form = (commutator(r, a) * commutator(b, r)).trace() / 2.0;
  Complex trace_form =
      (r * r * anticommutator(a, b)).trace() / 2.0 - (r * a * r * b).trace();
  if (std::abs(commutator_form - trace_form) > 1e-12 * (1.0 + std::abs(trace_form)))
    throw std::runtime_error("alt_cov: algebraic forms disagree");
  return commutator_form;
}

double variance(const DensityMatrix& rho, const Matrix& a) {
  check_dims(rho, a);
  if (!is_hermitian(a)) throw std::invalid_argument("variance: operator not Hermitian");
  return cov(rho, a, a).real();
}

double alt_variance(const DensityMatrix& rho, const Matrix& a) {
  check_dims(rho, a);
  if (!is_hermitian(a)) throw std::invalid_argument("alt_variance: operator not Hermitian");
  Matrix c = commutator(a, rho.mat());
  return (c * c.adjoint()).trace().real() / 2.0;
}

CovarianceReport report(const DensityMatrix& rho, const Matrix& a, const Matrix& b) {
  return CovarianceReport{cov(rho, a, b),       alt_cov(rho, a, b),
                          variance(rho, a),     variance(rho, b),
                          alt_variance(rho, a), alt_variance(rho, b)};
}

InequalityAudit inequality_audit(const DensityMatrix& rho, const Matrix& a, const Matrix& b) {
  constexpr double slack = 1e-9;
  InequalityAudit out{};
  const Matrix& r = rho.mat();

  Complex cov_aa = cov(rho, a, a), cov_bb = cov(rho, b, b);
  out.var_product = cov_aa.real() * cov_bb.real();
  out.cov_sq = std::norm(cov(rho, a, b));

  double c_aa = alt_cov(rho, a, a.adjoint()).real();
  double c_bb = alt_cov(rho, b, b.adjoint()).real();
  out.alt_var_product = c_aa * c_bb;
  out.alt_cov_sq = std::norm(alt_cov(rho, a, b.adjoint()));

  out.heisenberg = std::norm((r * commutator(a, b)).trace()) / 4.0;

  out.var_cov_ok = out.var_product >= out.cov_sq - slack;
  out.alt_ok = out.alt_var_product >= out.alt_cov_sq - slack;
  out.var_ge_alt_var_a = cov_aa.real() >= c_aa - slack;
  out.var_ge_alt_var_b = cov_bb.real() >= c_bb - slack;
  out.heisenberg_ok = out.var_product >= out.heisenberg - slack;
  return out;
}

Complex odd_commutator_trace(const DensityMatrix& rho, std::span<const Matrix> ops) {
  if (ops.empty() || ops.size() % 2 == 0)
    throw std::invalid_argument("odd_commutator_trace: list length must be odd");
  if (std::abs(rho.purity() - 1.0) > 1e-8)
    throw std::invalid_argument("odd_commutator_trace: state is not pure");
  Matrix prod = Matrix::Identity(rho.dim(), rho.dim());
  for (const Matrix& op : ops) prod *= commutator(op, rho.mat());
  return prod.trace();
}

}  // namespace qcov
