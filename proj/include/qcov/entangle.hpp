#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qcov/correlation.hpp"

namespace qcov {

enum class Side { First, Second };

// An operator on one factor together with its embedding into the product
// space (A (x) 1 or 1 (x) B).
struct LocalOperator {
  Side side;
  Matrix local;
  Matrix embedded;
};
LocalOperator make_local(Side side, const Matrix& local, int d1, int d2);

// U = U1 (x) U2 with Hermitian-generator coordinates: the first d1^2 params
// build the generator of U1 (diagonal reals then upper-triangle re/im
// pairs), the remaining d2^2 build U2.
struct LocalUnitary {
  Matrix u1;
  Matrix u2;
  Eigen::VectorXd params;
  Matrix composite() const { return kron(u1, u2); }
};
LocalUnitary local_unitary_from_params(const Eigen::VectorXd& params, int d1, int d2);

// Hermitian d x d matrix from d^2 real coordinates.
Matrix hermitian_from_params(const double* params, int d);

struct OptimizerConfig {
  int restarts = 32;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  int max_iters = 5000;
};

struct OptimizationResult {
  double max_value = 0.0;
  LocalUnitary optimizer;
  int restarts = 0;
  bool converged = false;
  std::vector<double> history;  // best value per restart
};

// Diagonal +1/-1 pair discriminator: +1 at slot i, -1 at slot j, 0 elsewhere.
Matrix pair_discrimination_operator(int d, int i, int j);

// diag(exp(2*pi*i*k/d)) for k = 1..d; unitary and traceless. d=2 gives
// diag(-1, 1).
Matrix equal_weight_operator(int d);

enum class Measure { Cov, AltCov };

// max over local unitaries U = U1 (x) U2 of |cov_{U rho U^dag}(A(x)1, 1(x)B)|
// (or the alternative covariance). Deterministic for a fixed seed; the first
// restart starts at the identity parametrization.
OptimizationResult covariance_entanglement(const DensityMatrix& rho, const Matrix& a_local,
                                           const Matrix& b_local, Measure measure,
                                           const OptimizerConfig& cfg = {});

// min over local unitaries of var_{U rho U^dag}(A (x) 1): used to exhibit the
// zero-variance orientation of pure product states.
OptimizationResult min_local_variance(const DensityMatrix& rho, const Matrix& a_local,
                                      const OptimizerConfig& cfg = {});

// Maximum of |cov| over *all pure states* of a 2 (x) 3 system under the
// equal-weight operator pair; strictly below 1.
struct UnequalDimResult {
  double best = 0.0;
  double gap = 0.0;  // 1 - best
  int restarts = 0;
};
UnequalDimResult max_cov_unequal_dims(const OptimizerConfig& cfg = {});

struct KrausChannel {
  std::vector<Matrix> ops;
  double gamma = 0.0;  // sum V^dag V = gamma * I
};
KrausChannel make_channel(std::vector<Matrix> ops);

// rho -> sum V rho V^dag. Without renormalization the output trace must
// stay within 1e-8 of 1, otherwise an error is raised.
DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& ch,
                            bool renormalize = false);

// The eight local product measurement operators that map |uu><uu| to
// |uu><uu|/2 + |(u+d)(u+d)><(u+d)(u+d)|/8; complete with gamma = 1.
KrausChannel lgm_channel();

// |C_rho(A (x) 1, 1 (x) B)| for rho = sum_i w_i P_i^(1) (x) P_i^(2).
struct ProjectorPair {
  double weight;
  Matrix p1;  // projector on factor 1
  Matrix p2;  // projector on factor 2
};
double separable_mixture_altcov(const std::vector<ProjectorPair>& terms, const Matrix& a_local,
                                const Matrix& b_local);

// Generic multi-start Nelder-Mead used by the operations above; exposed for
// the state-space search in max_cov_unequal_dims and for tests.
struct SearchResult {
  double best_value = 0.0;
  Eigen::VectorXd best_point;
  bool converged = false;
  std::vector<double> history;
};
SearchResult multi_start_minimize(const std::function<double(const Eigen::VectorXd&)>& f,
                                  int n_params, const OptimizerConfig& cfg);

}  // namespace qcov
