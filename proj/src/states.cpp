#include "qcov/states.hpp"

#include <cmath>
#include <stdexcept>

namespace qcov {

namespace {

Vector basis_ket(int dim, int k) {
  Vector v = Vector::Zero(dim);
  v(k) = 1.0;
  return v;
}

// Outer product |v><v| without normalization.
Matrix outer(const Vector& v) { return v * v.adjoint(); }

}  // namespace

DensityMatrix::DensityMatrix(Matrix m) : mat_(std::move(m)) { validate(); }

DensityMatrix::DensityMatrix(Matrix m, int d1, int d2)
    : mat_(std::move(m)), bipart_(Bipartition{d1, d2}) {
  if (d1 < 1 || d2 < 1 || static_cast<Eigen::Index>(d1) * d2 != mat_.rows())
    throw std::invalid_argument("DensityMatrix: bipartition does not match dimension");
  validate();
}

void DensityMatrix::validate() const {
  require_finite(mat_);
  if (mat_.rows() != mat_.cols() || mat_.rows() < 1)
    throw std::invalid_argument("DensityMatrix: matrix must be square");
  if (!is_hermitian(mat_, kTol))
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  if (std::abs(mat_.trace().real() - 1.0) > kTol || std::abs(mat_.trace().imag()) > kTol)
    throw std::invalid_argument("DensityMatrix: trace is not 1");
  EigSystem es = herm_eig(mat_);
  if (es.values.minCoeff() < -kTol)
    throw std::invalid_argument("DensityMatrix: negative eigenvalue");
}

Bipartition DensityMatrix::require_bipartition() const {
  if (!bipart_) throw std::invalid_argument("DensityMatrix: bipartition required");
  return *bipart_;
}

double DensityMatrix::purity() const { return (mat_ * mat_).trace().real(); }

DensityMatrix DensityMatrix::reduced(Factor keep) const {
  Bipartition b = require_bipartition();
  Factor traced = (keep == Factor::First) ? Factor::Second : Factor::First;
  return DensityMatrix(partial_trace(mat_, b.d1, b.d2, traced));
}

PureState::PureState(Vector amps) : amps_(std::move(amps)) {
  require_finite(amps_);
  double n = amps_.norm();
  if (n < 1e-14) throw std::invalid_argument("PureState: zero vector");
  if (std::abs(n - 1.0) > kTol) throw std::invalid_argument("PureState: not normalized");
}

PureState::PureState(Vector amps, int d1, int d2) : PureState(std::move(amps)) {
  if (d1 < 1 || d2 < 1 || static_cast<Eigen::Index>(d1) * d2 != amps_.size())
    throw std::invalid_argument("PureState: bipartition does not match dimension");
  bipart_ = Bipartition{d1, d2};
}

DensityMatrix PureState::projector() const {
  Matrix p = outer(amps_);
  if (bipart_) return DensityMatrix(std::move(p), bipart_->d1, bipart_->d2);
  return DensityMatrix(std::move(p));
}

PureState bell(BellKind kind) {
  const double r = 1.0 / std::sqrt(2.0);
  Vector v = Vector::Zero(4);
  switch (kind) {
    case BellKind::PhiPlus:  v(0) = r;  v(3) = r;  break;
    case BellKind::PhiMinus: v(0) = r;  v(3) = -r; break;
    case BellKind::PsiPlus:  v(1) = r;  v(2) = r;  break;
    case BellKind::PsiMinus: v(1) = r;  v(2) = -r; break;
  }
  return PureState(std::move(v), 2, 2);
}

PureState pure_family(double x) {
  Vector v = Vector::Zero(4);
  v(0) = std::cos(x);
  v(3) = std::sin(x);
  return PureState(std::move(v), 2, 2);
}

DensityMatrix mix(const std::vector<std::pair<double, DensityMatrix>>& terms) {
  if (terms.empty()) throw std::invalid_argument("mix: empty term list");
  double wsum = 0.0;
  const int dim = terms.front().second.dim();
  Matrix acc = Matrix::Zero(dim, dim);
  for (const auto& [w, rho] : terms) {
    if (w < 0.0) throw std::invalid_argument("mix: negative weight");
    if (rho.dim() != dim) throw std::invalid_argument("mix: dimension mismatch");
    wsum += w;
    acc += w * rho.mat();
  }
  if (std::abs(wsum - 1.0) > kTol) throw std::invalid_argument("mix: weights do not sum to 1");
  auto bp = terms.front().second.bipartition();
  if (bp) return DensityMatrix(std::move(acc), bp->d1, bp->d2);
  return DensityMatrix(std::move(acc));
}

DensityMatrix counterexample_state() {
  Vector uu_dd = basis_ket(4, 0) + basis_ket(4, 3);  // un-normalized, norm^2 = 2
  Matrix m = outer(uu_dd) / 4.0 + outer(basis_ket(4, 1)) / 4.0 + outer(basis_ket(4, 2)) / 4.0;
  return DensityMatrix(std::move(m), 2, 2);
}

MixtureCatalog named_mixtures() {
  Vector uu = basis_ket(4, 0), dd = basis_ket(4, 3);
  Vector uu_dd = uu + dd;                       // norm^2 = 2
  Vector pp = Vector::Constant(4, Complex(1));  // |(u+d)(u+d)>, norm^2 = 4

  Matrix rho1 = (outer(uu) + outer(dd)) / 2.0;
  Matrix rho2 = outer(uu) / 2.0 + outer(uu_dd) / 4.0;
  Matrix rho3 = outer(uu);
  Matrix rho4 = outer(uu_dd) / 2.0;
  Matrix cross = outer(uu) / 2.0 + outer(pp) / 8.0;

  return MixtureCatalog{
      DensityMatrix(std::move(rho1), 2, 2), DensityMatrix(std::move(rho2), 2, 2),
      DensityMatrix(std::move(rho3), 2, 2), DensityMatrix(std::move(rho4), 2, 2),
      DensityMatrix(std::move(cross), 2, 2)};
}

}  // namespace qcov
