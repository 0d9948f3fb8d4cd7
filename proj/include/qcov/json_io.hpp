#pragma once

#include <json.hpp>

#include "qcov/entangle.hpp"
#include "qcov/invariants.hpp"
#include "qcov/majorana.hpp"

// JSON schemas shared with the CLI. Complex entries are 2-element [re, im]
// arrays; a density matrix is {"dims": [d1, d2], "matrix": [[[re,im],...],...]}.

namespace qcov {

nlohmann::json complex_to_json(const Complex& z);
Complex complex_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const nlohmann::json& j);

nlohmann::json constellation_to_json(const Constellation& c);
nlohmann::json optimization_result_to_json(const OptimizationResult& r);
nlohmann::json invariant_set_to_json(const InvariantSet& inv);

}  // namespace qcov
