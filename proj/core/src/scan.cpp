#include "hubbound/scan.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "hubbound/bounds.hpp"
#include "hubbound/densops.hpp"
#include "hubbound/fockspace.hpp"
#include "hubbound/hf.hpp"
#include "hubbound/lattice.hpp"
#include "hubbound/model.hpp"

namespace hubb {
namespace {

constexpr const char* kVersion = "0.1.0";
constexpr double kSectorDimCap = 250000.0;  // largest sector solved exactly

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_opt(const std::optional<double>& v) {
  return v ? fmt(*v) : std::string();
}

std::string sanitize(std::string s) {
  for (char& c : s)
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  return s;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r *= double(n - k + i) / double(i);
  return r;
}

double max_sector_dim(int sites, const ModelSpec& model, long N) {
  double best = 0.0;
  for (const auto& split : flavor_splits(sites, model, N)) {
    double d = 1.0;
    for (int c : split) d *= binomial(sites, c);
    best = std::max(best, d);
  }
  return best;
}

struct GridPoint {
  std::string lattice;
  int L = 0;
  long N = 0;
  double U = 0.0;
};

void compute_row(const ScanConfig& cfg, const GridPoint& pt, std::size_t index,
                 ScanRow& row) {
  const auto t0 = std::chrono::steady_clock::now();
  try {
    std::map<std::string, double> extra;
    if (cfg.t_tooth) extra["t_tooth"] = *cfg.t_tooth;
    const Lattice lat =
        build_lattice(lattice_kind_from_name(pt.lattice), pt.L, cfg.t, extra);
    const long sites = lat.site_count();
    const ModelSpec model = ModelSpec::from_name(
        cfg.model, cfg.M, pt.U, cfg.U_prime.value_or(pt.U));

    row.lattice = pt.lattice;
    row.L = pt.L;
    row.sites = sites;
    row.model = model.name();
    row.N = pt.N;
    row.n = double(pt.N) / double(sites);
    row.U = pt.U;

    const int flavors = model.flavor_count();
    if (pt.N < 0 || pt.N > long(flavors) * sites)
      throw std::runtime_error("N outside sector capacity");

    if (model.has_projector_form()) {
      const double u_eff = model.projector_coupling();
      const BoundReport rep = assemble_report(lat, pt.N, u_eff, cfg.constants);
      row.A_upper = rep.A_upper;
      row.epsilon_used = rep.epsilon_used;
      row.I_value = rep.I_value;
      row.delta_e_lower = rep.delta_e_lower;
      row.closed_form_value = rep.closed_form_value;
      row.branch = to_string(rep.branch);
    }

    if (cfg.bound_only) return;

    const bool ed_ok = long(flavors) * sites <= 63 &&
                       max_sector_dim(int(sites), model, pt.N) <= kSectorDimCap;
    if (!ed_ok) throw std::runtime_error("grid point not ED-feasible");

    const std::uint64_t seed = cfg.seed + 1000003 * (index + 1);
    const Matrix hopping = lat.hopping_matrix();
    const SectorMinimum mn = ground_state_energy(hopping, model, pt.N, seed);
    row.E_gs = mn.energy;

    if (pt.N > 0) {
      SectorBasis basis = enumerate_sector(int(sites), flavors, mn.counts);
      ManyBodyOperator op = assemble_hamiltonian(hopping, model, basis);
      GroundState gs = ground_state(op, seed);
      const Matrix gamma_gs = one_pdo(gs.vec, basis);
      const Matrix gamma0 = free_gamma0(hopping, flavors, pt.N);
      row.A_measured =
          lemma_contractions(gamma_gs, gamma0, int(sites)).A_measured;
    } else {
      row.A_measured = 0.0;
    }

    if (model.has_projector_form()) {
      HFOptions opts = cfg.hf;
      opts.seed = seed + 1;
      const HFResult hf = scf_solve(hopping, pt.N, model, opts);
      row.E_hf = hf.energy;
      row.restart_spread = hf.restart_spread;
      row.dE = *row.E_gs - hf.energy;
      row.dE_per_site = *row.dE / double(sites);
    }
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  row.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
}

int thread_count() {
  const char* env = std::getenv("HUBBOUND_THREADS");
  if (!env) return 1;
  const int n = std::atoi(env);
  return n >= 1 ? n : 1;
}

}  // namespace

std::vector<ScanRow> run_scan(const ScanConfig& cfg) {
  cfg.validate();
  std::vector<GridPoint> grid;
  for (const auto& name : cfg.lattices) {
    for (int L : cfg.L_values) {
      std::map<std::string, double> extra;
      if (cfg.t_tooth) extra["t_tooth"] = *cfg.t_tooth;
      const Lattice lat =
          build_lattice(lattice_kind_from_name(name), L, cfg.t, extra);
      std::vector<long> Ns = cfg.N_values;
      for (double d : cfg.densities)
        Ns.push_back(std::lround(d * double(lat.site_count())));
      for (long N : Ns)
        for (double U : cfg.U_values) grid.push_back({name, L, N, U});
    }
  }

  std::vector<ScanRow> rows(grid.size());
  std::atomic<std::size_t> next{0};
  const int workers = std::min<int>(thread_count(), int(grid.size()) + 1);
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= grid.size()) break;
      compute_row(cfg, grid[i], i, rows[i]);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return rows;
}

std::string scan_csv_header() {
  return "lattice,L,sites,model,N,n,U,E_gs,E_hf,dE,dE_per_site,A_measured,"
         "A_upper,epsilon_used,I_value,delta_e_lower,closed_form_value,"
         "branch,restart_spread,seconds,error";
}

std::string format_csv(const std::vector<ScanRow>& rows) {
  std::string out = scan_csv_header() + "\n";
  for (const auto& r : rows) {
    out += r.lattice + ',' + std::to_string(r.L) + ',' +
           std::to_string(r.sites) + ',' + r.model + ',' +
           std::to_string(r.N) + ',' + fmt(r.n) + ',' + fmt(r.U) + ',' +
           fmt_opt(r.E_gs) + ',' + fmt_opt(r.E_hf) + ',' + fmt_opt(r.dE) +
           ',' + fmt_opt(r.dE_per_site) + ',' + fmt_opt(r.A_measured) + ',' +
           fmt_opt(r.A_upper) + ',' + fmt_opt(r.epsilon_used) + ',' +
           fmt_opt(r.I_value) + ',' + fmt_opt(r.delta_e_lower) + ',' +
           fmt_opt(r.closed_form_value) + ',' + r.branch + ',' +
           fmt_opt(r.restart_spread) + ',' + fmt(r.seconds) + ',' +
           sanitize(r.error) + '\n';
  }
  return out;
}

void emit_csv(const std::vector<ScanRow>& rows, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << format_csv(rows);
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string format_json(const std::vector<ScanRow>& rows,
                        const ScanConfig& cfg) {
  using json = nlohmann::ordered_json;
  json meta;
  meta["version"] = kVersion;
  meta["lattice"] = cfg.lattices;
  meta["L"] = cfg.L_values;
  meta["t"] = cfg.t;
  if (cfg.t_tooth) meta["t_tooth"] = *cfg.t_tooth;
  meta["model"] = cfg.model;
  meta["M"] = cfg.M;
  if (cfg.U_prime) meta["U_prime"] = *cfg.U_prime;
  meta["N"] = cfg.N_values;
  meta["density"] = cfg.densities;
  meta["U"] = cfg.U_values;
  meta["constants"] = {{"c1", cfg.constants.c1},
                       {"c2", cfg.constants.c2},
                       {"c3", cfg.constants.c3},
                       {"c_lemma3", cfg.constants.c_lemma3},
                       {"c_eps", cfg.constants.c_eps}};
  if (cfg.constants.finite_size_exponent)
    meta["constants"]["fs_exponent"] = *cfg.constants.finite_size_exponent;
  meta["bound_only"] = cfg.bound_only;
  meta["hf"] = {{"restarts", cfg.hf.restarts},
                {"tol", cfg.hf.tol},
                {"max_iter", cfg.hf.max_iter},
                {"damping", cfg.hf.damping}};
  meta["seed"] = cfg.seed;

  json jrows = json::array();
  for (const auto& r : rows) {
    json j;
    j["lattice"] = r.lattice;
    j["L"] = r.L;
    j["sites"] = r.sites;
    j["model"] = r.model;
    j["N"] = r.N;
    j["n"] = r.n;
    j["U"] = r.U;
    auto put = [&j](const char* key, const std::optional<double>& v) {
      if (v) j[key] = *v;
    };
    put("E_gs", r.E_gs);
    put("E_hf", r.E_hf);
    put("dE", r.dE);
    put("dE_per_site", r.dE_per_site);
    put("A_measured", r.A_measured);
    put("A_upper", r.A_upper);
    put("epsilon_used", r.epsilon_used);
    put("I_value", r.I_value);
    put("delta_e_lower", r.delta_e_lower);
    put("closed_form_value", r.closed_form_value);
    if (!r.branch.empty()) j["branch"] = r.branch;
    put("restart_spread", r.restart_spread);
    if (!r.error.empty()) j["error"] = r.error;
    jrows.push_back(std::move(j));
  }
  json doc;
  doc["metadata"] = std::move(meta);
  doc["rows"] = std::move(jrows);
  return doc.dump(2) + "\n";
}

void emit_json(const std::vector<ScanRow>& rows, const ScanConfig& cfg,
               const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << format_json(rows, cfg);
  if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

std::optional<double> opt_cell(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return std::stod(s);
}

}  // namespace

std::vector<ScanRow> parse_scan_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line != scan_csv_header())
    throw std::runtime_error("unrecognized CSV header in " + path);
  std::vector<ScanRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto c = split_row(line);
    if (c.size() != 21)
      throw std::runtime_error("malformed CSV row in " + path);
    ScanRow r;
    r.lattice = c[0];
    r.L = std::stoi(c[1]);
    r.sites = std::stol(c[2]);
    r.model = c[3];
    r.N = std::stol(c[4]);
    r.n = std::stod(c[5]);
    r.U = std::stod(c[6]);
    r.E_gs = opt_cell(c[7]);
    r.E_hf = opt_cell(c[8]);
    r.dE = opt_cell(c[9]);
    r.dE_per_site = opt_cell(c[10]);
    r.A_measured = opt_cell(c[11]);
    r.A_upper = opt_cell(c[12]);
    r.epsilon_used = opt_cell(c[13]);
    r.I_value = opt_cell(c[14]);
    r.delta_e_lower = opt_cell(c[15]);
    r.closed_form_value = opt_cell(c[16]);
    r.branch = c[17];
    r.restart_spread = opt_cell(c[18]);
    r.seconds = std::stod(c[19]);
    r.error = c[20];
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<std::string> csv_column(const std::string& path,
                                    const std::string& name) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty CSV " + path);
  const auto headers = split_row(line);
  std::size_t idx = headers.size();
  for (std::size_t i = 0; i < headers.size(); ++i)
    if (headers[i] == name) idx = i;
  if (idx == headers.size())
    throw std::runtime_error("CSV has no column '" + name + "'");
  std::vector<std::string> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split_row(line);
    out.push_back(idx < cells.size() ? cells[idx] : "");
  }
  return out;
}

std::string bound_report_json(const BoundReport& rep) {
  using json = nlohmann::ordered_json;
  json j;
  j["lattice"] = to_string(rep.kind);
  j["L"] = rep.L;
  j["sites"] = rep.sites;
  j["N"] = rep.N;
  j["n"] = rep.n;
  j["U"] = rep.U;
  j["constants"] = {{"c1", rep.constants.c1},
                    {"c2", rep.constants.c2},
                    {"c3", rep.constants.c3},
                    {"c_lemma3", rep.constants.c_lemma3},
                    {"c_eps", rep.constants.c_eps}};
  if (rep.constants.finite_size_exponent)
    j["constants"]["fs_exponent"] = *rep.constants.finite_size_exponent;
  j["branch"] = to_string(rep.branch);
  j["epsilon_used"] = std::isfinite(rep.epsilon_used)
                          ? json(rep.epsilon_used)
                          : json("inf");
  j["I_value"] = rep.I_value;
  j["A_upper"] = rep.A_upper;
  j["delta_e_lower"] = rep.delta_e_lower;
  if (rep.closed_form_value) j["closed_form_value"] = *rep.closed_form_value;
  return j.dump(2) + "\n";
}

LinearFit fit_scaling(const std::vector<double>& x,
                      const std::vector<double>& y) {
  std::vector<double> ay(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) ay[i] = std::abs(y[i]);
  return loglog_fit(x, ay);
}

}  // namespace hubb
