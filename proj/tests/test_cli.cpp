#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <sstream>
#include <string>

#include "qcov/json_io.hpp"
#include "qcov/states.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int exit_code;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  std::string cmd = std::string(QCOV_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, std::move(out)};
}

json run_json(const std::string& args) {
  CliRun r = run_cli(args);
  REQUIRE(r.exit_code == 0);
  return json::parse(r.out);
}

// CSV body as parsed rows of strings.
std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / "qcov_cli_test";
  fs::create_directories(dir);
  return dir;
}

fs::path write_density(const std::string& name, const qcov::DensityMatrix& rho) {
  fs::path p = scratch_dir() / name;
  std::ofstream f(p);
  f << qcov::density_to_json(rho).dump(2);
  return p;
}

}  // namespace

TEST_CASE("table41 emits the four reference rows") {
  CliRun r = run_cli("table41 --format csv");
  CHECK(r.exit_code == 0);
  auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == std::vector<std::string>{"state", "cov", "cov_sq", "altcov", "altcov_sq"});
  auto cell = [&](int i, int k) { return std::stod(rows[i][k]); };
  // (|cov|, |C|) = (1, 0), (3/4, 1/4), (0, 0), (1, 1).
  CHECK(cell(1, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cell(1, 3) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(cell(2, 1) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(cell(2, 3) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(cell(3, 1) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(cell(3, 3) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(cell(4, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cell(4, 3) == doctest::Approx(1.0).epsilon(1e-12));
  // Squared columns.
  CHECK(cell(2, 2) == doctest::Approx(0.5625).epsilon(1e-12));
  CHECK(cell(2, 4) == doctest::Approx(0.0625).epsilon(1e-12));
}

TEST_CASE("counterexample reports cov 0 and alternative covariance 1/4") {
  json j = run_json("counterexample");
  CHECK(j["cov"].get<double>() < 1e-12);
  CHECK(j["alt_cov"].get<double>() == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("pure-family scan matches sin^2(2x)") {
  json rows = run_json("scan pure-family --points 21 --format json");
  REQUIRE(rows.size() == 21);
  for (const auto& row : rows) {
    double x = row["x"].get<double>();
    double expect = std::pow(std::sin(2.0 * x), 2);
    CHECK(row["cov"].get<double>() == doctest::Approx(expect).epsilon(1e-12));
    CHECK(row["altcov"].get<double>() == doctest::Approx(expect).epsilon(1e-12));
  }
  CHECK(rows.front()["x"].get<double>() == doctest::Approx(0.0));
  CHECK(rows.back()["x"].get<double>() ==
        doctest::Approx(std::numbers::pi / 2).epsilon(1e-12));
}

TEST_CASE("bell-rotation scan follows |cos(2 theta)| about x and is flat about y") {
  json xr = run_json("scan bell-rotation --axis x --points 9 --format json");
  for (const auto& row : xr) {
    double theta = row["theta"].get<double>();
    CHECK(row["cov"].get<double>() ==
          doctest::Approx(std::abs(std::cos(2.0 * theta))).epsilon(1e-10));
  }
  json yr = run_json("scan bell-rotation --axis y --points 9 --format json");
  for (const auto& row : yr)
    CHECK(row["cov"].get<double>() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("bell-mixture scan follows |2x - 1|") {
  json rows = run_json("scan bell-mixture --points 11 --format json");
  for (const auto& row : rows) {
    double x = row["x"].get<double>();
    CHECK(row["cov"].get<double>() == doctest::Approx(std::abs(2.0 * x - 1.0)).epsilon(1e-10));
    CHECK(row["altcov"].get<double>() ==
          doctest::Approx(std::abs(2.0 * x - 1.0)).epsilon(1e-10));
  }
}

TEST_CASE("output is byte-identical across reruns") {
  for (const std::string cmd :
       {std::string("table41 --format csv"), std::string("scan bell-mixture --points 31"),
        std::string("singlets --points 12 --format csv")}) {
    CliRun a = run_cli(cmd);
    CliRun b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("optimize on the Bell state reaches 1 and is seed-deterministic") {
  fs::path rho = write_density("bell.json", qcov::bell(qcov::BellKind::PhiPlus).projector());
  std::string cmd =
      "optimize --rho " + rho.string() + " --operators sigma3 --measure cov --restarts 6 --seed 5";
  CliRun a = run_cli(cmd);
  REQUIRE(a.exit_code == 0);
  json ja = json::parse(a.out);
  CHECK(ja["max_value"].get<double>() == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(ja["converged"].get<bool>());
  CHECK(ja["restarts"].get<int>() == 6);
  CHECK(ja["history"].size() == 6);

  CliRun b = run_cli(cmd);
  CHECK(a.out == b.out);
}

TEST_CASE("channel apply reproduces the cross-term mixture and round-trips") {
  using namespace qcov;
  Vector uu = Vector::Zero(4);
  uu(0) = 1.0;
  fs::path rho = write_density("uu.json", PureState(uu, 2, 2).projector());
  fs::path out = scratch_dir() / "channel_out.json";
  CliRun r = run_cli("channel apply --rho " + rho.string() + " --out " + out.string());
  REQUIRE(r.exit_code == 0);

  std::ifstream f(out);
  json j = json::parse(f);
  DensityMatrix got = density_from_json(j);
  Matrix expect = named_mixtures().cross_term_mixture.mat();
  CHECK((got.mat() - expect).cwiseAbs().maxCoeff() < 1e-12);

  // The emitted file is accepted unchanged by another ingesting command.
  json inv = run_json("invariants --rho " + out.string());
  CHECK(inv.contains("chi1"));
  CHECK(inv.contains("eps"));
  double chi1 = inv["chi1"].get<double>();
  double chi2 = inv["chi2"].get<double>();
  double purity = inv["purity"].get<double>();
  CHECK(inv["eps"].get<double>() == doctest::Approx(1.0 - chi1 - chi2 + purity).epsilon(1e-10));
}

TEST_CASE("invariants of the Bell state") {
  fs::path rho = write_density("bell2.json", qcov::bell(qcov::BellKind::PhiPlus).projector());
  json j = run_json("invariants --rho " + rho.string());
  CHECK(j["chi1"].get<double>() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(j["chi2"].get<double>() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(j["purity"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("singlets series") {
  CliRun r = run_cli("singlets --points 6 --format csv");
  CHECK(r.exit_code == 0);
  auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 7);
  std::vector<int> expect{1, 1, 4, 4, 9, 9};
  for (int n = 0; n < 6; ++n) CHECK(std::stoi(rows[n + 1][1]) == expect[n]);

  json j = run_json("singlets --points 8 --dims 2 3");
  CHECK(j["series"].size() == 8);
  CHECK(j["series"][0].get<int>() == 1);
}

TEST_CASE("majorana subcommands") {
  const std::string bell_amps = "0.70710678118654752 0 0 0 0.70710678118654752 0";
  json disp = run_json("majorana dispersion --amps " + bell_amps);
  CHECK(disp["j"].get<double>() == doctest::Approx(1.0));
  CHECK(disp["dispersion"].get<double>() == doctest::Approx(2.0).epsilon(1e-10));

  json poly = run_json("majorana state2poly --amps " + bell_amps);
  REQUIRE(poly["coeffs"].size() == 3);
  CHECK(poly["coeffs"][1][0].get<double>() == doctest::Approx(0.0));

  json con = run_json("majorana roots --coeffs 1 0 0 0 0 0 1 0");  // z^3 + 1
  CHECK(con["points"].size() == 3);
  CHECK(con["roots_at_infinity"].get<int>() == 0);
  for (const auto& p : con["points"]) {
    double n = std::hypot(p[0].get<double>(), p[1].get<double>(), p[2].get<double>());
    CHECK(n == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(p[2].get<double>()) < 1e-10);
  }

  json cat = run_json("majorana catalog --two-j 5");
  REQUIRE(cat["entries"].size() == 2);
  CHECK(cat["entries"][0]["dispersion"].get<double>() == doctest::Approx(8.75).epsilon(1e-10));
  CHECK(cat["entries"][1]["dispersion"].get<double>() == doctest::Approx(8.75).epsilon(1e-10));
}

TEST_CASE("exit codes distinguish validation, numerical and I/O failures") {
  CHECK(run_cli("invariants --rho /nonexistent/rho.json").exit_code == 4);
  CHECK(run_cli("table41 --out /nonexistent/dir/out.csv").exit_code == 4);

  fs::path bad = scratch_dir() / "bad.json";
  std::ofstream(bad) << "not json";
  CHECK(run_cli("invariants --rho " + bad.string()).exit_code == 2);

  fs::path not_density = scratch_dir() / "not_density.json";
  std::ofstream(not_density) << "{\"matrix\": [[[1.0, 0.0]]], \"dims\": [2, 2]}";
  CHECK(run_cli("invariants --rho " + not_density.string()).exit_code == 2);

  CHECK(run_cli("scan pure-family --points 1").exit_code == 2);
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("majorana catalog --two-j 9").exit_code == 2);
  CHECK(run_cli("majorana dispersion --amps 1 0 0").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}
