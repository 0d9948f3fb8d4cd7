#include "qcov/invariants.hpp"

#include <stdexcept>

namespace qcov {

InvariantSet chi_invariants(const DensityMatrix& rho) {
  Bipartition bp = rho.require_bipartition();
  Matrix r1 = partial_trace(rho.mat(), bp.d1, bp.d2, Factor::Second);  // on factor 1
  Matrix r2 = partial_trace(rho.mat(), bp.d1, bp.d2, Factor::First);   // on factor 2
  InvariantSet out{};
  out.chi1 = (r1 * r1).trace().real();
  out.chi2 = (r2 * r2).trace().real();
  out.purity = rho.purity();

  if (bp.d1 == 2 && bp.d2 == 2) {
    // eps_{aa'} eps^{bb'} eps_{ii'} eps^{jj'} rho^{ai}_{bj} rho^{a'i'}_{b'j'}
    // with rho^{ai}_{bj} = <a,i|rho|b,j> and eps = [[0,1],[-1,0]].
    const double eps_t[2][2] = {{0.0, 1.0}, {-1.0, 0.0}};
    const Matrix& m = rho.mat();
    Complex acc = 0.0;
    for (int a = 0; a < 2; ++a)
      for (int ap = 0; ap < 2; ++ap)
        for (int b = 0; b < 2; ++b)
          for (int bp2 = 0; bp2 < 2; ++bp2)
            for (int i = 0; i < 2; ++i)
              for (int ip = 0; ip < 2; ++ip)
                for (int jj = 0; jj < 2; ++jj)
                  for (int jp = 0; jp < 2; ++jp) {
                    double w = eps_t[a][ap] * eps_t[b][bp2] * eps_t[i][ip] * eps_t[jj][jp];
                    if (w == 0.0) continue;
                    acc += w * m(a * 2 + i, b * 2 + jj) * m(ap * 2 + ip, bp2 * 2 + jp);
                  }
    out.eps = acc.real();
  }
  return out;
}

namespace {

// Partitions of n into at most d parts, by DP over the largest allowed
// part count.
std::int64_t partitions_at_most(int n, int d) {
  std::vector<std::int64_t> p(n + 1, 0);
  p[0] = 1;
  for (int parts = 1; parts <= d; ++parts)
    for (int v = parts; v <= n; ++v) p[v] += p[v - parts];
  return p[n];
}

}  // namespace

std::int64_t singlet_count(int n, int d1, int d2) {
  if (n < 0 || d1 < 1 || d2 < 1) throw std::invalid_argument("singlet_count: bad arguments");
  return partitions_at_most(n, d1) * partitions_at_most(n, d2);
}

std::vector<std::int64_t> generating_series(int q_terms) {
  if (q_terms < 1) throw std::invalid_argument("generating_series: need at least one term");
  // (1 - q^2)^2 (1 - q) = 1 - q - 2q^2 + 2q^3 + q^4 - q^5
  const std::int64_t denom[6] = {1, -1, -2, 2, 1, -1};
  std::vector<std::int64_t> c(q_terms, 0);
  for (int n = 0; n < q_terms; ++n) {
    std::int64_t numer = (n == 0 || n == 2) ? 1 : 0;
    std::int64_t acc = numer;
    for (int k = 1; k <= 5 && k <= n; ++k) acc -= denom[k] * c[n - k];
    c[n] = acc;
  }
  return c;
}

double invariant_measure(const InvariantSet& inv,
                         const std::function<double(double, double)>& f,
                         const std::function<double(double, double)>& g) {
  return f(inv.chi1, inv.chi2) + inv.purity * g(inv.chi1, inv.chi2);
}

}  // namespace qcov
