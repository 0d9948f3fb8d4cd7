#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qcov/states.hpp"

// Local-unitary invariants of bipartite density matrices and the counting
// of independent invariants by restricted partitions.

namespace qcov {

struct InvariantSet {
  double chi1;    // tr[(tr_2 rho)^2]
  double chi2;    // tr[(tr_1 rho)^2]
  double purity;  // tr(rho^2)
  // Quadratic epsilon-contraction; 2x2-by-2x2 systems only.
  std::optional<double> eps;
};

InvariantSet chi_invariants(const DensityMatrix& rho);

// Number of independent degree-n invariants: the product of the counts of
// partitions of n into at most d1 and at most d2 parts.
std::int64_t singlet_count(int n, int d1, int d2);

// Taylor coefficients of (1+q^2)/((1-q^2)^2 (1-q)), exact integers.
std::vector<std::int64_t> generating_series(int q_terms);

// E(rho) = f(chi1, chi2) + tr(rho^2) * g(chi1, chi2) for caller-supplied
// f and g.
double invariant_measure(const InvariantSet& inv,
                         const std::function<double(double, double)>& f,
                         const std::function<double(double, double)>& g);

}  // namespace qcov
