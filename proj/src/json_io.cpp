#include "qcov/json_io.hpp"

#include <stdexcept>

namespace qcov {

using nlohmann::json;

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::invalid_argument("complex entry must be a [re, im] array");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a non-empty array");
  const auto rows = j.size();
  Matrix m(rows, rows);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != rows)
      throw std::invalid_argument("matrix must be square");
    for (std::size_t k = 0; k < rows; ++k) m(i, k) = complex_from_json(j[i][k]);
  }
  return m;
}

json density_to_json(const DensityMatrix& rho) {
  json out;
  if (auto bp = rho.bipartition()) out["dims"] = json::array({bp->d1, bp->d2});
  out["matrix"] = matrix_to_json(rho.mat());
  return out;
}

DensityMatrix density_from_json(const json& j) {
  if (!j.contains("matrix")) throw std::invalid_argument("density matrix JSON needs \"matrix\"");
  Matrix m = matrix_from_json(j["matrix"]);
  if (j.contains("dims")) {
    const auto& d = j["dims"];
    if (!d.is_array() || d.size() != 2)
      throw std::invalid_argument("\"dims\" must be a [d1, d2] array");
    return DensityMatrix(std::move(m), d[0].get<int>(), d[1].get<int>());
  }
  return DensityMatrix(std::move(m));
}

json constellation_to_json(const Constellation& c) {
  json pts = json::array();
  for (const auto& p : c.points) pts.push_back(json::array({p.x(), p.y(), p.z()}));
  return json{{"j", c.two_j / 2.0},
              {"points", std::move(pts)},
              {"roots_at_infinity", c.roots_at_infinity}};
}

json optimization_result_to_json(const OptimizationResult& r) {
  return json{{"max_value", r.max_value},
              {"restarts", r.restarts},
              {"converged", r.converged},
              {"history", r.history},
              {"u1", matrix_to_json(r.optimizer.u1)},
              {"u2", matrix_to_json(r.optimizer.u2)}};
}

json invariant_set_to_json(const InvariantSet& inv) {
  json out{{"chi1", inv.chi1}, {"chi2", inv.chi2}, {"purity", inv.purity}};
  if (inv.eps) out["eps"] = *inv.eps;
  return out;
}

}  // namespace qcov
