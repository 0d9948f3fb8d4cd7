// Command-line front end: reference tables, parameter scans, optimizer and
// channel runs, Majorana constellations, invariants and singlet counts,
// emitted as JSON or CSV.

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "qcov/entangle.hpp"
#include "qcov/invariants.hpp"
#include "qcov/json_io.hpp"
#include "qcov/majorana.hpp"

namespace {

using nlohmann::json;
using namespace qcov;

// I/O failures carry their own exit code (4), distinct from validation (2)
// and numerical (3) failures.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_double(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(17);
  os << v;
  return os.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw IoError("cannot open output file: " + out_path);
  f << text;
  if (!f) throw IoError("write failed: " + out_path);
}

json load_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open input file: " + path);
  json j;
  try {
    f >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON in ") + path + ": " + e.what());
  }
  return j;
}

// A row is a label (possibly empty) plus numeric cells.
struct TableData {
  std::vector<std::string> headers;
  std::vector<std::pair<std::string, std::vector<double>>> rows;
};

std::string table_to_csv(const TableData& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.headers.size(); ++i)
    os << (i ? "," : "") << t.headers[i];
  os << "\n";
  for (const auto& [label, cells] : t.rows) {
    bool first = true;
    if (!label.empty()) {
      os << label;
      first = false;
    }
    for (double v : cells) {
      if (!first) os << ",";
      os << format_double(v);
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

json table_to_json(const TableData& t) {
  json rows = json::array();
  for (const auto& [label, cells] : t.rows) {
    json row;
    std::size_t off = label.empty() ? 0 : 1;
    if (!label.empty()) row[t.headers[0]] = label;
    for (std::size_t i = 0; i < cells.size(); ++i) row[t.headers[i + off]] = cells[i];
    rows.push_back(std::move(row));
  }
  return rows;
}

void emit_table(const TableData& t, const std::string& out, const std::string& format) {
  if (format == "csv")
    write_output(out, table_to_csv(t));
  else
    write_output(out, table_to_json(t).dump(2) + "\n");
}

void emit_json(const json& j, const std::string& out) { write_output(out, j.dump(2) + "\n"); }

Matrix base_operator(const std::string& name, int d) {
  if (name == "equal-weight") return equal_weight_operator(d);
  if (name == "pair") return pair_discrimination_operator(d, 0, 1);
  if (name == "sigma3") {
    if (d != 2) throw std::invalid_argument("sigma3 operators need a 2-dimensional factor");
    return pauli(3);
  }
  throw std::invalid_argument("unknown operator family: " + name);
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(complex_to_json(v(k)));
  return out;
}

Vector parse_complex_list(const std::vector<double>& reals, const char* what) {
  if (reals.empty() || reals.size() % 2 != 0)
    throw std::invalid_argument(std::string(what) + " must be an even-length re/im list");
  Vector v(static_cast<Eigen::Index>(reals.size() / 2));
  for (Eigen::Index k = 0; k < v.size(); ++k)
    v(k) = Complex(reals[2 * k], reals[2 * k + 1]);
  return v;
}

struct MeasurePair {
  double cov_abs;
  double alt_abs;
};

MeasurePair measures_at(const DensityMatrix& rho, const Matrix& a, const Matrix& b) {
  return {std::abs(cov(rho, a, b)), std::abs(alt_cov(rho, a, b))};
}

void run_table41(const std::string& out, const std::string& format) {
  MixtureCatalog cat = named_mixtures();
  Matrix a = kron(pauli(3), Matrix::Identity(2, 2));
  Matrix b = kron(Matrix::Identity(2, 2), pauli(3));
  TableData t;
  t.headers = {"state", "cov", "cov_sq", "altcov", "altcov_sq"};
  auto add = [&](const std::string& label, const DensityMatrix& rho) {
    MeasurePair m = measures_at(rho, a, b);
    t.rows.push_back({label, {m.cov_abs, m.cov_abs * m.cov_abs, m.alt_abs, m.alt_abs * m.alt_abs}});
  };
  add("rho1", cat.rho1);
  add("rho2", cat.rho2);
  add("rho3", cat.rho3);
  add("rho4", cat.rho4);
  emit_table(t, out, format);
}

void run_counterexample(const std::string& out, const std::string& format) {
  DensityMatrix rho = counterexample_state();
  Matrix a = kron(pauli(3), Matrix::Identity(2, 2));
  Matrix b = kron(Matrix::Identity(2, 2), pauli(3));
  MeasurePair m = measures_at(rho, a, b);
  if (format == "csv") {
    TableData t;
    t.headers = {"cov", "alt_cov"};
    t.rows.push_back({"", {m.cov_abs, m.alt_abs}});
    emit_table(t, out, format);
  } else {
    emit_json(json{{"cov", m.cov_abs}, {"alt_cov", m.alt_abs}}, out);
  }
}

void run_scan(const std::string& kind, int points, const std::string& axis,
              const std::string& operators, const std::string& out, const std::string& format) {
  if (points < 2) throw std::invalid_argument("--points must be at least 2");
  TableData t;
  Matrix a2 = base_operator(operators, 2);
  Matrix id2 = Matrix::Identity(2, 2);
  if (kind == "bell-rotation") {
    // Both local operators rotated together about one axis, evaluated on the
    // Bell state.
    DensityMatrix rho = bell(BellKind::PhiPlus).projector();
    Matrix gen = (axis == "y") ? pauli(2) : pauli(1);
    t.headers = {"theta", "cov", "altcov"};
    for (int i = 0; i < points; ++i) {
      double theta = std::numbers::pi * i / (points - 1);
      Matrix u = expm_i(Matrix(-0.5 * theta * gen));
      Matrix rotated = u * a2 * u.adjoint();
      MeasurePair m = measures_at(rho, kron(rotated, id2), kron(id2, rotated));
      t.rows.push_back({"", {theta, m.cov_abs, m.alt_abs}});
    }
  } else if (kind == "pure-family") {
    t.headers = {"x", "cov", "altcov"};
    for (int i = 0; i < points; ++i) {
      double x = (std::numbers::pi / 2.0) * i / (points - 1);
      DensityMatrix rho = pure_family(x).projector();
      MeasurePair m = measures_at(rho, kron(a2, id2), kron(id2, a2));
      t.rows.push_back({"", {x, m.cov_abs, m.alt_abs}});
    }
  } else if (kind == "bell-mixture") {
    DensityMatrix b1 = bell(BellKind::PhiPlus).projector();
    DensityMatrix b2 = bell(BellKind::PsiPlus).projector();
    t.headers = {"x", "cov", "altcov"};
    for (int i = 0; i < points; ++i) {
      double x = static_cast<double>(i) / (points - 1);
      DensityMatrix rho = mix({{x, b1}, {1.0 - x, b2}});
      MeasurePair m = measures_at(rho, kron(a2, id2), kron(id2, a2));
      t.rows.push_back({"", {x, m.cov_abs, m.alt_abs}});
    }
  } else {
    throw std::invalid_argument("unknown scan kind: " + kind);
  }
  emit_table(t, out, format);
}

void run_optimize(const std::string& rho_path, const std::string& operators,
                  const std::string& measure, int restarts, std::uint64_t seed, double tol,
                  const std::string& out) {
  DensityMatrix rho = density_from_json(load_json_file(rho_path));
  Bipartition bp = rho.require_bipartition();
  OptimizerConfig cfg;
  cfg.restarts = restarts;
  cfg.seed = seed;
  cfg.tol = tol;
  OptimizationResult res = covariance_entanglement(
      rho, base_operator(operators, bp.d1), base_operator(operators, bp.d2),
      measure == "altcov" ? Measure::AltCov : Measure::Cov, cfg);
  if (!res.converged) throw std::runtime_error("optimizer did not converge");
  emit_json(optimization_result_to_json(res), out);
}

void run_channel_apply(const std::string& rho_path, const std::string& out) {
  DensityMatrix rho = density_from_json(load_json_file(rho_path));
  emit_json(density_to_json(apply_channel(rho, lgm_channel())), out);
}

void run_invariants(const std::string& rho_path, const std::string& out) {
  DensityMatrix rho = density_from_json(load_json_file(rho_path));
  emit_json(invariant_set_to_json(chi_invariants(rho)), out);
}

void run_singlets(int terms, int d1, int d2, const std::string& out,
                  const std::string& format) {
  if (terms < 1) throw std::invalid_argument("--points must be at least 1");
  std::vector<std::int64_t> series;
  for (int n = 0; n < terms; ++n) series.push_back(singlet_count(n, d1, d2));
  if (format == "csv") {
    std::ostringstream os;
    os << "n,count\n";
    for (int n = 0; n < terms; ++n) os << n << "," << series[n] << "\n";
    write_output(out, os.str());
  } else {
    emit_json(json{{"d1", d1}, {"d2", d2}, {"series", series}}, out);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covariance-based correlation and entanglement toolkit"};
  app.require_subcommand(1);

  std::string out_path;
  std::string format = "json";
  app.add_option("--out", out_path, "Output path (stdout when omitted)");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* table41 = app.add_subcommand("table41", "Reference mixture table");
  auto* counterexample =
      app.add_subcommand("counterexample", "State with cov = 0 but alternative covariance 1/4");

  auto* scan = app.add_subcommand("scan", "Parameter scans");
  scan->require_subcommand(1);
  int points = 101;
  std::string axis = "x";
  std::string operators = "sigma3";
  scan->add_option("--points", points, "Grid size");
  scan->add_option("--operators", operators, "Local operator family")
      ->check(CLI::IsMember({"equal-weight", "pair", "sigma3"}));
  auto* scan_rot = scan->add_subcommand("bell-rotation", "Bell state under joint rotations");
  scan_rot->add_option("--axis", axis, "Rotation axis")->check(CLI::IsMember({"x", "y"}));
  auto* scan_fam = scan->add_subcommand("pure-family", "cos(x)|uu> + sin(x)|dd> family");
  auto* scan_mix = scan->add_subcommand("bell-mixture", "Two-Bell-state mixture");

  auto* optimize = app.add_subcommand("optimize", "Maximize a measure over local unitaries");
  std::string rho_path;
  std::string measure = "cov";
  int restarts = 32;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  optimize->add_option("--rho", rho_path, "Density matrix JSON file")->required();
  optimize->add_option("--operators", operators, "Local operator family")
      ->check(CLI::IsMember({"equal-weight", "pair", "sigma3"}));
  optimize->add_option("--measure", measure, "Objective")
      ->check(CLI::IsMember({"cov", "altcov"}));
  optimize->add_option("--restarts", restarts, "Multi-start count");
  optimize->add_option("--seed", seed, "Random seed");
  optimize->add_option("--tol", tol, "Convergence tolerance");

  auto* channel = app.add_subcommand("channel", "Kraus channels");
  channel->require_subcommand(1);
  auto* channel_apply = channel->add_subcommand("apply", "Apply the local measurement channel");
  channel_apply->add_option("--rho", rho_path, "Density matrix JSON file")->required();

  auto* majorana = app.add_subcommand("majorana", "Spin states as root constellations");
  majorana->require_subcommand(1);
  std::vector<double> amps_raw, coeffs_raw;
  int two_j = 2;
  auto* maj_s2p = majorana->add_subcommand("state2poly", "Amplitudes to polynomial");
  maj_s2p->add_option("--amps", amps_raw, "Amplitudes as re im pairs, ascending m")->required();
  auto* maj_roots = majorana->add_subcommand("roots", "Polynomial to constellation");
  maj_roots->add_option("--coeffs", coeffs_raw, "Coefficients as re im pairs, a_0 first")
      ->required();
  auto* maj_disp = majorana->add_subcommand("dispersion", "Total-spin dispersion");
  maj_disp->add_option("--amps", amps_raw, "Amplitudes as re im pairs, ascending m")->required();
  auto* maj_cat = majorana->add_subcommand("catalog", "Maximum-dispersion configurations");
  maj_cat->add_option("--two-j", two_j, "Twice the spin");

  auto* invariants = app.add_subcommand("invariants", "Local-unitary invariants");
  invariants->add_option("--rho", rho_path, "Density matrix JSON file")->required();

  auto* singlets = app.add_subcommand("singlets", "Invariant-count series");
  std::vector<int> dims{2, 2};
  singlets->add_option("--points", points, "Number of series terms");
  singlets->add_option("--dims", dims, "Factor dimensions")->expected(2);

  // Let --out/--format (declared on the root) be accepted after any
  // subcommand.
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
    for (CLI::App* sub : cmd->get_subcommands([](const CLI::App*) { return true; })) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*table41) {
      run_table41(out_path, format);
    } else if (*counterexample) {
      run_counterexample(out_path, format);
    } else if (*scan) {
      std::string kind = (*scan_rot)   ? "bell-rotation"
                         : (*scan_fam) ? "pure-family"
                         : (*scan_mix) ? "bell-mixture"
                                       : "";
      run_scan(kind, points, axis, operators, out_path, format);
    } else if (*optimize) {
      run_optimize(rho_path, operators, measure, restarts, seed, tol, out_path);
    } else if (*channel) {
      run_channel_apply(rho_path, out_path);
    } else if (*majorana) {
      if (*maj_s2p) {
        Vector amps = parse_complex_list(amps_raw, "--amps");
        SpinState s = make_spin_state(static_cast<int>(amps.size()) - 1, amps);
        MajoranaPolynomial p = state_to_polynomial(s);
        emit_json(json{{"j", p.two_j / 2.0}, {"coeffs", vector_to_json(p.coeffs)}}, out_path);
      } else if (*maj_roots) {
        Vector coeffs = parse_complex_list(coeffs_raw, "--coeffs");
        MajoranaPolynomial p{static_cast<int>(coeffs.size()) - 1, coeffs};
        emit_json(constellation_to_json(roots(p)), out_path);
      } else if (*maj_disp) {
        Vector amps = parse_complex_list(amps_raw, "--amps");
        SpinState s = make_spin_state(static_cast<int>(amps.size()) - 1, amps);
        emit_json(json{{"j", s.two_j / 2.0}, {"dispersion", dispersion(s)}}, out_path);
      } else if (*maj_cat) {
        json entries = json::array();
        for (const auto& e : max_dispersion_catalog(two_j))
          entries.push_back(json{{"geometry", e.geometry},
                                 {"coeffs", vector_to_json(e.poly.coeffs)},
                                 {"dispersion", e.dispersion},
                                 {"constellation", constellation_to_json(roots(e.poly))}});
        emit_json(json{{"j", two_j / 2.0}, {"entries", std::move(entries)}}, out_path);
      }
    } else if (*invariants) {
      run_invariants(rho_path, out_path);
    } else if (*singlets) {
      run_singlets(points, dims[0], dims[1], out_path, format);
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
