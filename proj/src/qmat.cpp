#include "qcov/qmat.hpp"

#include <cmath>
#include <stdexcept>

namespace qcov {

bool approx_equal(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  Matrix id = Matrix::Identity(m.rows(), m.cols());
  return (m.adjoint() * m - id).cwiseAbs().maxCoeff() <= tol;
}

void require_finite(const Matrix& m) {
  if (!m.allFinite()) throw std::invalid_argument("matrix has non-finite entries");
}

void require_same_dim(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("dimension mismatch");
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const auto ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
  Matrix out(ra * rb, ca * cb);
  for (Eigen::Index i = 0; i < ra; ++i)
    for (Eigen::Index j = 0; j < ca; ++j)
      out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
  return out;
}

Matrix partial_trace(const Matrix& m, int d1, int d2, Factor traced) {
  if (d1 < 1 || d2 < 1 || m.rows() != m.cols() ||
      m.rows() != static_cast<Eigen::Index>(d1) * d2)
    throw std::invalid_argument("partial_trace: bad bipartition");
  if (traced == Factor::First) {
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

EigSystem herm_eig(const Matrix& m, double tol) {
  if (!is_hermitian(m, tol)) throw std::invalid_argument("herm_eig: input not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("herm_eig: eigensolver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b);
  return a * b - b * a;
}

Matrix anticommutator(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b);
  return a * b + b * a;
}

Matrix expm_i(const Matrix& h) {
  EigSystem es = herm_eig(h);
  Vector phases(es.values.size());
  for (Eigen::Index k = 0; k < es.values.size(); ++k)
    phases(k) = std::exp(Complex(0.0, es.values(k)));
  return es.vectors * phases.asDiagonal() * es.vectors.adjoint();
}

Matrix pauli(int k) {
  Matrix s(2, 2);
  switch (k) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli: index must be 1, 2 or 3");
  }
  return s;
}

}  // namespace qcov
