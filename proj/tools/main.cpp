#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>

#include "hubbound/bounds.hpp"
#include "hubbound/config.hpp"
#include "hubbound/fockspace.hpp"
#include "hubbound/hf.hpp"
#include "hubbound/lattice.hpp"
#include "hubbound/multiband.hpp"
#include "hubbound/scan.hpp"
#include "hubbound/spectrum.hpp"

namespace {

int cmd_scan(const std::string& config_path) {
  hubb::ScanConfig cfg;
  try {
    cfg = hubb::parse_config_file(config_path);
  } catch (const hubb::ConfigError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  const auto rows = hubb::run_scan(cfg);
  if (!cfg.out_csv.empty()) hubb::emit_csv(rows, cfg.out_csv);
  if (!cfg.out_json.empty()) hubb::emit_json(rows, cfg, cfg.out_json);
  if (cfg.out_csv.empty() && cfg.out_json.empty())
    std::cout << hubb::format_csv(rows);
  int failed = 0;
  for (const auto& r : rows)
    if (!r.error.empty()) {
      ++failed;
      std::cerr << "row error: " << r.lattice << " L=" << r.L << " N=" << r.N
                << " U=" << r.U << ": " << r.error << "\n";
    }
  std::cerr << rows.size() << " rows, " << failed << " failed\n";
  return failed > 0 ? 1 : 0;
}

int cmd_dos(const std::string& lattice, int L, int bins, double t,
            const std::string& out) {
  const auto lat =
      hubb::build_lattice(hubb::lattice_kind_from_name(lattice), L, t);
  const auto spec = hubb::spectrum_table(lat);
  const auto dos = hubb::dos_histogram(spec, bins);
  if (out.empty()) {
    std::printf("E_lo,E_hi,rho\n");
    for (std::size_t b = 0; b < dos.density.size(); ++b)
      std::printf("%.17g,%.17g,%.17g\n", dos.edges[b], dos.edges[b + 1],
                  dos.density[b]);
  } else {
    hubb::write_dos_csv(dos, out);
  }
  return 0;
}

int cmd_bound(const std::string& lattice, int L, long N, double U, double t) {
  const auto lat =
      hubb::build_lattice(hubb::lattice_kind_from_name(lattice), L, t);
  const auto rep = hubb::assemble_report(lat, N, U, hubb::BoundConstants{});
  std::cout << hubb::bound_report_json(rep);
  return 0;
}

int cmd_fit(const std::string& csv, const std::string& xcol,
            const std::string& ycol) {
  const auto xs = hubb::csv_column(csv, xcol);
  const auto ys = hubb::csv_column(csv, ycol);
  std::vector<double> x, y;
  for (std::size_t i = 0; i < xs.size() && i < ys.size(); ++i) {
    if (xs[i].empty() || ys[i].empty()) continue;
    x.push_back(std::stod(xs[i]));
    y.push_back(std::stod(ys[i]));
  }
  const auto fit = hubb::fit_scaling(x, y);
  std::printf("slope %.17g\nintercept %.17g\nr2 %.17g\n", fit.slope,
              fit.intercept, fit.r2);
  return 0;
}

bool check(bool ok, const char* what) {
  std::printf("%-44s %s\n", what, ok ? "ok" : "FAIL");
  return ok;
}

int cmd_selftest() {
  using namespace hubb;
  bool all = true;

  for (auto kind : {LatticeKind::Sc1d, LatticeKind::Sc2d, LatticeKind::Square,
                    LatticeKind::Bcc}) {
    const auto lat = build_lattice(kind, 2, 1.0);
    all &= check(fourier_check(lat) < 1e-9,
                 ("fourier " + to_string(kind)).c_str());
  }
  for (auto kind : {LatticeKind::Kagome, LatticeKind::Sawtooth}) {
    const auto lat = build_lattice(kind, 3, 1.0);
    const auto fb = flat_band_weight(lat);
    all &= check(fb.count == lat.cell_count(),
                 ("flat band " + to_string(kind)).c_str());
  }

  // dimer at half filling: E_gs = (U - sqrt(U^2 + 16 t^2)) / 2
  {
    Matrix hop(2, 2);
    hop << 0, 1, 1, 0;
    const double U = 3.0;
    const auto mn = ground_state_energy(hop, ModelSpec::single_band(U), 2);
    const double exact = 0.5 * (U - std::sqrt(U * U + 16.0));
    all &= check(std::abs(mn.energy - exact) < 1e-10, "dimer ground energy");
  }

  // bootstrap closure: A solves A^2 = (c1 U sqrt(n)/eps) A + c2 I
  {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.1, 5.0);
    bool ok = true;
    BoundConstants c;
    for (int i = 0; i < 100; ++i) {
      const double U = u(rng), n = u(rng) / 5.0, eps = u(rng), I = u(rng);
      const double A = bootstrap_A(U, n, eps, I, c);
      const double lhs = A * A;
      const double rhs = c.c1 * U * std::sqrt(n) / eps * A + c.c2 * I;
      ok &= std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, lhs);
    }
    all &= check(ok, "bootstrap fixed point");
  }

  {
    const auto lat = build_lattice(LatticeKind::Sc1d, 1, 1.0);
    bool ok = true;
    try {
      reduction_check(lat, 4, 2.5);
    } catch (const std::exception&) {
      ok = false;
    }
    all &= check(ok, "two-flavor reduction, 2-site chain");
  }

  std::printf("selftest %s\n", all ? "passed" : "FAILED");
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rigorous correlation-energy bounds for lattice fermions"};
  app.require_subcommand(1);

  std::string config_path, lattice, csv, out;
  std::string xcol = "U", ycol = "dE";
  int L = 1, bins = 100;
  long N = 0;
  double U = 0.0, t = 1.0;

  auto* scan = app.add_subcommand("scan", "run a parameter sweep");
  scan->add_option("config", config_path, "key = value config file")
      ->required();

  auto* dos = app.add_subcommand("dos", "density-of-states histogram CSV");
  dos->add_option("lattice", lattice)->required();
  dos->add_option("L", L)->required();
  dos->add_option("--bins", bins);
  dos->add_option("--t", t);
  dos->add_option("--out", out);

  auto* bound = app.add_subcommand("bound", "bound report for one instance");
  bound->add_option("lattice", lattice)->required();
  bound->add_option("L", L)->required();
  bound->add_option("N", N)->required();
  bound->add_option("U", U)->required();
  bound->add_option("--t", t);

  auto* fit = app.add_subcommand("fit", "log-log scaling fit on a scan CSV");
  fit->add_option("csv", csv)->required();
  fit->add_option("--x", xcol);
  fit->add_option("--y", ycol);

  app.add_subcommand("selftest", "fast internal consistency checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (scan->parsed()) return cmd_scan(config_path);
    if (dos->parsed()) return cmd_dos(lattice, L, bins, t, out);
    if (bound->parsed()) return cmd_bound(lattice, L, N, U, t);
    if (fit->parsed()) return cmd_fit(csv, xcol, ycol);
    return cmd_selftest();
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
