#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qcov/qmat.hpp"

namespace qcov {

struct Bipartition {
  int d1 = 0;
  int d2 = 0;
};

// Hermitian, unit-trace, positive-semidefinite matrix, optionally carrying
// a (d1, d2) bipartition. All invariants are checked at construction.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix m);
  DensityMatrix(Matrix m, int d1, int d2);

  const Matrix& mat() const { return mat_; }
  int dim() const { return static_cast<int>(mat_.rows()); }
  const std::optional<Bipartition>& bipartition() const { return bipart_; }
  Bipartition require_bipartition() const;

  double purity() const;
  // Reduced density matrix of the kept factor (bipartition required).
  DensityMatrix reduced(Factor keep) const;

 private:
  void validate() const;
  Matrix mat_;
  std::optional<Bipartition> bipart_;
};

class PureState {
 public:
  explicit PureState(Vector amps);
  PureState(Vector amps, int d1, int d2);

  const Vector& amps() const { return amps_; }
  int dim() const { return static_cast<int>(amps_.size()); }
  const std::optional<Bipartition>& bipartition() const { return bipart_; }

  DensityMatrix projector() const;

 private:
  Vector amps_;
  std::optional<Bipartition> bipart_;
};

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

// Basis ordering throughout is |uu>, |ud>, |du>, |dd| (first factor slow).
PureState bell(BellKind kind);

// cos(x)|uu> + sin(x)|dd>, bipartition (2,2).
PureState pure_family(double x);

// Convex combination; weights must be nonnegative and sum to 1.
DensityMatrix mix(const std::vector<std::pair<double, DensityMatrix>>& terms);

// The named 2x2-by-2x2 mixtures exercised throughout the test suites and CLI.
struct MixtureCatalog {
  DensityMatrix rho1;  // [|uu><uu| + |dd><dd|]/2
  DensityMatrix rho2;  // |uu><uu|/2 + |uu+dd><uu+dd|/4
  DensityMatrix rho3;  // |uu><uu|
  DensityMatrix rho4;  // |uu+dd><uu+dd|/2 (Bell projector)
  DensityMatrix cross_term_mixture;  // |uu><uu|/2 + |(u+d)(u+d)><(u+d)(u+d)|/8
};
MixtureCatalog named_mixtures();

// |uu+dd><uu+dd|/4 + |ud><ud|/4 + |du><du|/4: the state on which the
// classical covariance of a diagonal local pair vanishes while the
// alternative covariance does not.
DensityMatrix counterexample_state();

}  // namespace qcov
