#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "hubbound/config.hpp"
#include "hubbound/hf.hpp"
#include "hubbound/scan.hpp"

using namespace hubb;

namespace {

ScanConfig tiny_config() {
  return parse_config_text(
      "lattice = sc1d\n"
      "L = 2\n"
      "N = 2\n"
      "U = 0, 1\n");
}

std::string temp_path(const char* name) {
  return std::string("/tmp/hubbound_test_") + name;
}

}  // namespace

TEST_CASE("config parse round trip") {
  const auto cfg = parse_config_text(
      "# comment line\n"
      "lattice = sc1d, square\n"
      "L = 2, 3\n"
      "t = 1.5\n"
      "model = sum\n"
      "M = 2\n"
      "N = 1, 2\n"
      "U_log = 0.001:0.1:5\n"
      "c1 = 2.0\n"
      "fs_exponent = -0.25\n"
      "bound_only = true\n"
      "hf_restarts = 3\n"
      "seed = 77\n");
  CHECK(cfg.lattices.size() == 2);
  CHECK(cfg.L_values == std::vector<int>{2, 3});
  CHECK(cfg.t == 1.5);
  CHECK(cfg.model == "sum");
  CHECK(cfg.U_values.size() == 5);
  CHECK(cfg.U_values.front() == doctest::Approx(0.001));
  CHECK(cfg.U_values.back() == doctest::Approx(0.1));
  CHECK(cfg.constants.c1 == 2.0);
  REQUIRE(cfg.constants.finite_size_exponent.has_value());
  CHECK(*cfg.constants.finite_size_exponent == -0.25);
  CHECK(cfg.bound_only);
  CHECK(cfg.hf.restarts == 3);
  CHECK(cfg.seed == 77);
  CHECK(cfg.hf.seed == 77);
}

TEST_CASE("config rejects malformed input") {
  CHECK_THROWS_AS(parse_config_text("lattice = sc1d\nL = 2\nN = 2\nU = 1\n"
                                    "typo_key = 3\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config_text("lattice = sc1d\nL = 2\nN = 2\n"),
                  ConfigError);  // missing U
  CHECK_THROWS_AS(parse_config_text("lattice = sc1d\nL = 2\nU = 1\n"),
                  ConfigError);  // missing N / density
  CHECK_THROWS_AS(
      parse_config_text("lattice = sc1d\nL = 2\nN = 1\ndensity = 0.5\nU = 1\n"),
      ConfigError);
  CHECK_THROWS_AS(
      parse_config_text("lattice = sc1d\nL = 2\nN = 1\nU = 1\nU_log = 1:2:4\n"),
      ConfigError);
  CHECK_THROWS_AS(parse_config_text("lattice = sc1d\nL = 2\nL = 3\nN = 1\nU = 1\n"),
                  ConfigError);  // duplicate key
  CHECK_THROWS_AS(parse_config_text("lattice = mars\nL = 2\nN = 1\nU = 1\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config_text("lattice = sc1d\nL = 0\nN = 1\nU = 1\n"),
                  ConfigError);
}

TEST_CASE("scan: U=0 rows have vanishing gap") {
  auto cfg = tiny_config();
  const auto rows = run_scan(cfg);
  REQUIRE(rows.size() == 2);
  for (const auto& r : rows) {
    CHECK(r.error.empty());
    REQUIRE(r.dE.has_value());
    CHECK(*r.E_gs <= *r.E_hf + 1e-9 * (1.0 + r.U));
  }
  CHECK(std::abs(*rows[0].dE) < 1e-10);
  CHECK(rows[0].n == doctest::Approx(0.5));
}

TEST_CASE("bound-only rows omit energies") {
  const auto cfg = parse_config_text(
      "lattice = bcc\nL = 4\nN = 16\nU = 2\nbound_only = true\n");
  const auto rows = run_scan(cfg);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].error.empty());
  CHECK_FALSE(rows[0].E_gs.has_value());
  CHECK_FALSE(rows[0].E_hf.has_value());
  CHECK(rows[0].A_upper.has_value());
  CHECK(rows[0].delta_e_lower.has_value());
  CHECK(rows[0].branch == "ln2-singular");
}

TEST_CASE("infeasible ED point is an in-row error") {
  const auto cfg =
      parse_config_text("lattice = square\nL = 4\nN = 32\nU = 1\n");
  const auto rows = run_scan(cfg);
  REQUIRE(rows.size() == 1);
  CHECK_FALSE(rows[0].error.empty());
}

TEST_CASE("csv emission and round trip") {
  const auto cfg = tiny_config();
  const auto rows = run_scan(cfg);
  const auto path = temp_path("roundtrip.csv");
  emit_csv(rows, path);
  const auto back = parse_scan_csv(path);
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(back[i].lattice == rows[i].lattice);
    CHECK(back[i].N == rows[i].N);
    CHECK(back[i].U == rows[i].U);
    CHECK(back[i].E_gs == rows[i].E_gs);  // %.17g round-trips exactly
    CHECK(back[i].E_hf == rows[i].E_hf);
    CHECK(back[i].A_upper == rows[i].A_upper);
    CHECK(back[i].seconds == rows[i].seconds);
    CHECK(back[i].branch == rows[i].branch);
  }
  std::remove(path.c_str());
}

TEST_CASE("empty table is a header-only csv") {
  CHECK(format_csv({}) == scan_csv_header() + "\n");
}

TEST_CASE("json metadata echoes seed and constants") {
  auto cfg = tiny_config();
  cfg.constants.c1 = 2.5;
  const auto rows = run_scan(cfg);
  const auto doc = format_json(rows, cfg);
  CHECK(doc.find("\"seed\": 20240901") != std::string::npos);
  CHECK(doc.find("\"c1\": 2.5") != std::string::npos);
  CHECK(doc.find("\"version\": \"0.1.0\"") != std::string::npos);
}

TEST_CASE("json output is deterministic across runs") {
  const auto cfg = tiny_config();
  const auto a = format_json(run_scan(cfg), cfg);
  const auto b = format_json(run_scan(cfg), cfg);
  CHECK(a == b);
}

TEST_CASE("fit_scaling on synthetic power laws") {
  std::vector<double> U, y2, y43;
  for (double u = 1e-3; u <= 0.1; u *= 1.7) {
    U.push_back(u);
    y2.push_back(u * u);
    y43.push_back(std::pow(u, 4.0 / 3.0));
  }
  CHECK(fit_scaling(U, y2).slope == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(fit_scaling(U, y43).slope ==
        doctest::Approx(4.0 / 3.0).epsilon(1e-6));
}

TEST_CASE("dimer gap scales quadratically at small U") {
  Matrix hop(2, 2);
  hop << 0, 1, 1, 0;
  std::vector<double> U, dE;
  for (double u = 1e-3; u <= 0.1; u *= 2.0) {
    const double e_gs = 0.5 * (u - std::sqrt(u * u + 16.0));
    const double e_hf = scf_solve(hop, 2, ModelSpec::single_band(u)).energy;
    U.push_back(u);
    dE.push_back(e_gs - e_hf);
  }
  const auto fit = fit_scaling(U, dE);
  CHECK(fit.slope == doctest::Approx(2.0).epsilon(0.02));
}

TEST_CASE("csv_column lookup") {
  const auto cfg = tiny_config();
  const auto rows = run_scan(cfg);
  const auto path = temp_path("cols.csv");
  emit_csv(rows, path);
  const auto col = csv_column(path, "U");
  REQUIRE(col.size() == rows.size());
  CHECK(col[0] == "0");
  CHECK_THROWS(csv_column(path, "no_such_column"));
  std::remove(path.c_str());
}
