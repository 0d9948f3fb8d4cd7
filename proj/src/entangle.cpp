#include "qcov/entangle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace qcov {

namespace {

struct NmOutcome {
  double f;
  Eigen::VectorXd x;
  bool converged;
};

// Nelder-Mead with the dimension-adaptive coefficients of Gao & Han.
NmOutcome nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                      const Eigen::VectorXd& x0, double step, double tol, int max_iters) {
  const int n = static_cast<int>(x0.size());
  const double alpha = 1.0;
  const double beta = 1.0 + 2.0 / n;
  const double gamma = 0.75 - 0.5 / n;
  const double delta = 1.0 - 1.0 / n;

  std::vector<Eigen::VectorXd> xs(n + 1, x0);
  std::vector<double> fs(n + 1);
  for (int i = 0; i < n; ++i) xs[i + 1](i) += step;
  for (int i = 0; i <= n; ++i) fs[i] = f(xs[i]);

  auto order = [&] {
    std::vector<int> idx(n + 1);
    for (int i = 0; i <= n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return fs[a] < fs[b]; });
    std::vector<Eigen::VectorXd> xs2(n + 1);
    std::vector<double> fs2(n + 1);
    for (int i = 0; i <= n; ++i) {
      xs2[i] = xs[idx[i]];
      fs2[i] = fs[idx[i]];
    }
    xs = std::move(xs2);
    fs = std::move(fs2);
  };

  bool converged = false;
  for (int iter = 0; iter < max_iters; ++iter) {
    order();
    if (fs[n] - fs[0] < tol) {
      converged = true;
      break;
    }
    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i) centroid += xs[i];
    centroid /= n;

    Eigen::VectorXd xr = centroid + alpha * (centroid - xs[n]);
    double fr = f(xr);
    if (fr < fs[0]) {
      Eigen::VectorXd xe = centroid + beta * (xr - centroid);
      double fe = f(xe);
      if (fe < fr) {
        xs[n] = xe;
        fs[n] = fe;
      } else {
        xs[n] = xr;
        fs[n] = fr;
      }
    } else if (fr < fs[n - 1]) {
      xs[n] = xr;
      fs[n] = fr;
    } else {
      bool outside = fr < fs[n];
      Eigen::VectorXd xc = centroid + (outside ? gamma : -gamma) * (xr - centroid);
      double fc = f(xc);
      if (fc < std::min(fr, fs[n])) {
        xs[n] = xc;
        fs[n] = fc;
      } else {
        for (int i = 1; i <= n; ++i) {
          xs[i] = xs[0] + delta * (xs[i] - xs[0]);
          fs[i] = f(xs[i]);
        }
      }
    }
  }
  order();
  return {fs[0], xs[0], converged};
}

void fill_generator(Matrix& h, const double* p, int d) {
  int idx = 0;
  for (int i = 0; i < d; ++i) h(i, i) = p[idx++];
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      double re = p[idx++];
      double im = p[idx++];
      h(i, j) = Complex(re, im);
      h(j, i) = Complex(re, -im);
    }
}

}  // namespace

Matrix hermitian_from_params(const double* params, int d) {
  Matrix h = Matrix::Zero(d, d);
  fill_generator(h, params, d);
  return h;
}

LocalUnitary local_unitary_from_params(const Eigen::VectorXd& params, int d1, int d2) {
  if (params.size() != static_cast<Eigen::Index>(d1) * d1 + static_cast<Eigen::Index>(d2) * d2)
    throw std::invalid_argument("local_unitary_from_params: wrong parameter count");
  LocalUnitary lu;
  lu.params = params;
  lu.u1 = expm_i(hermitian_from_params(params.data(), d1));
  lu.u2 = expm_i(hermitian_from_params(params.data() + d1 * d1, d2));
  return lu;
}

LocalOperator make_local(Side side, const Matrix& local, int d1, int d2) {
  if (local.rows() != local.cols())
    throw std::invalid_argument("make_local: operator must be square");
  int d = static_cast<int>(local.rows());
  if ((side == Side::First && d != d1) || (side == Side::Second && d != d2))
    throw std::invalid_argument("make_local: operator does not fit the selected factor");
  Matrix embedded = (side == Side::First) ? kron(local, Matrix::Identity(d2, d2))
                                          : kron(Matrix::Identity(d1, d1), local);
  return LocalOperator{side, local, std::move(embedded)};
}

Matrix pair_discrimination_operator(int d, int i, int j) {
  if (d < 2) throw std::invalid_argument("pair_discrimination_operator: d must be >= 2");
  if (i == j || i < 0 || j < 0 || i >= d || j >= d)
    throw std::invalid_argument("pair_discrimination_operator: bad slot indices");
  Matrix m = Matrix::Zero(d, d);
  m(i, i) = 1.0;
  m(j, j) = -1.0;
  return m;
}

Matrix equal_weight_operator(int d) {
  if (d < 2) throw std::invalid_argument("equal_weight_operator: d must be >= 2");
  Matrix m = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k)
    m(k, k) = std::exp(Complex(0.0, 2.0 * std::numbers::pi * (k + 1) / d));
  return m;
}

SearchResult multi_start_minimize(const std::function<double(const Eigen::VectorXd&)>& f,
                                  int n_params, const OptimizerConfig& cfg) {
  SearchResult out;
  out.best_value = std::numeric_limits<double>::infinity();
  for (int r = 0; r < cfg.restarts; ++r) {
    Eigen::VectorXd x0 = Eigen::VectorXd::Zero(n_params);
    if (r > 0) {
      std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(r));
      std::normal_distribution<double> dist(0.0, 1.5);
      for (int i = 0; i < n_params; ++i) x0(i) = dist(rng);
    }
    NmOutcome nm = nelder_mead(f, x0, 0.7, cfg.tol, cfg.max_iters);
    // Polish: restart from the found point with shrinking initial steps.
    for (double step : {0.05, 0.005}) {
      NmOutcome refined = nelder_mead(f, nm.x, step, cfg.tol, cfg.max_iters);
      if (refined.f < nm.f) nm = refined;
      nm.converged = nm.converged || refined.converged;
    }
    out.history.push_back(nm.f);
    if (nm.f < out.best_value) {
      out.best_value = nm.f;
      out.best_point = nm.x;
      out.converged = nm.converged;
    }
  }
  return out;
}

OptimizationResult covariance_entanglement(const DensityMatrix& rho, const Matrix& a_local,
                                           const Matrix& b_local, Measure measure,
                                           const OptimizerConfig& cfg) {
  Bipartition bp = rho.require_bipartition();
  LocalOperator a = make_local(Side::First, a_local, bp.d1, bp.d2);
  LocalOperator b = make_local(Side::Second, b_local, bp.d1, bp.d2);
  const int n = bp.d1 * bp.d1 + bp.d2 * bp.d2;

  auto objective = [&](const Eigen::VectorXd& params) {
    LocalUnitary lu = local_unitary_from_params(params, bp.d1, bp.d2);
    Matrix u = lu.composite();
    Matrix rotated = u * rho.mat() * u.adjoint();
    const Matrix& r = rotated;
    Complex value;
    if (measure == Measure::Cov) {
      value = (r * a.embedded * b.embedded).trace() -
              (r * a.embedded).trace() * (r * b.embedded).trace();
    } else {
      value = (commutator(r, a.embedded) * commutator(b.embedded, r)).trace() / 2.0;
    }
    return -std::abs(value);
  };

  SearchResult sr = multi_start_minimize(objective, n, cfg);
  OptimizationResult out;
  out.max_value = -sr.best_value;
  out.optimizer = local_unitary_from_params(sr.best_point, bp.d1, bp.d2);
  out.restarts = cfg.restarts;
  out.converged = sr.converged;
  for (double v : sr.history) out.history.push_back(-v);
  return out;
}

OptimizationResult min_local_variance(const DensityMatrix& rho, const Matrix& a_local,
                                      const OptimizerConfig& cfg) {
  Bipartition bp = rho.require_bipartition();
  LocalOperator a = make_local(Side::First, a_local, bp.d1, bp.d2);
  const int n = bp.d1 * bp.d1 + bp.d2 * bp.d2;

  auto objective = [&](const Eigen::VectorXd& params) {
    LocalUnitary lu = local_unitary_from_params(params, bp.d1, bp.d2);
    Matrix u = lu.composite();
    Matrix r = u * rho.mat() * u.adjoint();
    Complex mean = (r * a.embedded).trace();
    Complex second = (r * a.embedded * a.embedded).trace();
    return (second - mean * mean).real();
  };

  SearchResult sr = multi_start_minimize(objective, n, cfg);
  OptimizationResult out;
  out.max_value = sr.best_value;  // minimized variance
  out.optimizer = local_unitary_from_params(sr.best_point, bp.d1, bp.d2);
  out.restarts = cfg.restarts;
  out.converged = sr.converged;
  out.history = sr.history;
  return out;
}

UnequalDimResult max_cov_unequal_dims(const OptimizerConfig& cfg) {
  const int d1 = 2, d2 = 3, dim = d1 * d2;
  Matrix a = kron(equal_weight_operator(d1), Matrix::Identity(d2, d2));
  Matrix b = kron(Matrix::Identity(d1, d1), equal_weight_operator(d2));

  // Maximizing over local unitaries and pure states together is a search
  // over all pure states; parametrize the amplitude vector directly.
  auto objective = [&](const Eigen::VectorXd& params) {
    Vector psi(dim);
    for (int k = 0; k < dim; ++k) psi(k) = Complex(params(2 * k), params(2 * k + 1));
    double norm = psi.norm();
    if (norm < 1e-9) return 0.0;
    psi /= norm;
    Matrix r = psi * psi.adjoint();
    Complex value = (r * a * b).trace() - (r * a).trace() * (r * b).trace();
    return -std::abs(value);
  };

  SearchResult sr = multi_start_minimize(objective, 2 * dim, cfg);
  UnequalDimResult out;
  out.best = -sr.best_value;
  out.gap = 1.0 - out.best;
  out.restarts = cfg.restarts;
  return out;
}

KrausChannel make_channel(std::vector<Matrix> ops) {
  if (ops.empty()) throw std::invalid_argument("make_channel: no operators");
  const auto dim = ops.front().rows();
  Matrix sum = Matrix::Zero(dim, dim);
  for (const Matrix& v : ops) {
    if (v.rows() != dim || v.cols() != dim)
      throw std::invalid_argument("make_channel: mixed dimensions");
    sum += v.adjoint() * v;
  }
  double gamma = sum.trace().real() / static_cast<double>(dim);
  if (gamma <= 0.0 || !approx_equal(sum, gamma * Matrix::Identity(dim, dim)))
    throw std::invalid_argument("make_channel: sum V^dag V is not proportional to identity");
  return KrausChannel{std::move(ops), gamma};
}

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& ch, bool renormalize) {
  if (ch.ops.front().rows() != rho.dim())
    throw std::invalid_argument("apply_channel: dimension mismatch");
  Matrix out = Matrix::Zero(rho.dim(), rho.dim());
  for (const Matrix& v : ch.ops) out += v * rho.mat() * v.adjoint();
  double tr = out.trace().real();
  if (renormalize) {
    if (std::abs(tr) < 1e-12) throw std::invalid_argument("apply_channel: zero-trace output");
    out /= tr;
  } else if (std::abs(tr - 1.0) > 1e-8) {
    throw std::invalid_argument("apply_channel: channel is not trace preserving");
  }
  auto bp = rho.bipartition();
  if (bp) return DensityMatrix(std::move(out), bp->d1, bp->d2);
  return DensityMatrix(std::move(out));
}

KrausChannel lgm_channel() {
  Vector u(2), d(2), plus(2);
  u << 1, 0;
  d << 0, 1;
  plus << 1, 1;  // |u+d>, un-normalized
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  std::vector<Matrix> ops;
  for (const Vector& b1 : {u, d})
    for (const Vector& b2 : {u, d}) {
      Matrix bra = kron(b1, b2).adjoint();
      ops.push_back(inv_sqrt2 * kron(u, u) * bra);
      ops.push_back((inv_sqrt2 / 2.0) * kron(plus, plus) * bra);
    }
  return make_channel(std::move(ops));
}

double separable_mixture_altcov(const std::vector<ProjectorPair>& terms, const Matrix& a_local,
                                const Matrix& b_local) {
  if (terms.empty()) throw std::invalid_argument("separable_mixture_altcov: empty mixture");
  const int d1 = static_cast<int>(terms.front().p1.rows());
  const int d2 = static_cast<int>(terms.front().p2.rows());
  Matrix acc = Matrix::Zero(d1 * d2, d1 * d2);
  for (const auto& t : terms) acc += t.weight * kron(t.p1, t.p2);
  DensityMatrix rho(std::move(acc), d1, d2);
  Matrix a = kron(a_local, Matrix::Identity(d2, d2));
  Matrix b = kron(Matrix::Identity(d1, d1), b_local);
  return std::abs(alt_cov(rho, a, b));
}

}  // namespace qcov
