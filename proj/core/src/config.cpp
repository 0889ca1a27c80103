#include "hubbound/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "hubbound/lattice.hpp"
#include "hubbound/model.hpp"

namespace hubb {
namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream ss(s);
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double to_double(const std::string& key, const std::string& s) {
  try {
    size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: bad number for '" + key + "': " + s);
  }
}

long to_long(const std::string& key, const std::string& s) {
  try {
    size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: bad integer for '" + key + "': " + s);
  }
}

bool to_bool(const std::string& key, const std::string& s) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw ConfigError("config: bad boolean for '" + key + "': " + s);
}

// "lo:hi:count" -> logarithmically spaced grid, lo > 0.
std::vector<double> log_grid(const std::string& key, const std::string& s) {
  std::vector<std::string> parts;
  std::string item;
  std::stringstream ss(s);
  while (std::getline(ss, item, ':')) parts.push_back(trim(item));
  if (parts.size() != 3)
    throw ConfigError("config: '" + key + "' wants lo:hi:count");
  const double lo = to_double(key, parts[0]);
  const double hi = to_double(key, parts[1]);
  const long count = to_long(key, parts[2]);
  if (lo <= 0 || hi <= lo || count < 2)
    throw ConfigError("config: '" + key + "' wants 0 < lo < hi, count >= 2");
  std::vector<double> grid(count);
  for (long i = 0; i < count; ++i)
    grid[i] = lo * std::pow(hi / lo, double(i) / double(count - 1));
  return grid;
}

}  // namespace

void ScanConfig::validate() const {
  if (lattices.empty()) throw ConfigError("config: 'lattice' is required");
  try {
    for (const auto& name : lattices) lattice_kind_from_name(name);
    ModelSpec::from_name(model, M, 1.0, 1.0);  // name/M sanity
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (L_values.empty()) throw ConfigError("config: 'L' is required");
  for (int L : L_values)
    if (L < 1) throw ConfigError("config: L must be >= 1");
  if (t <= 0) throw ConfigError("config: t must be positive");
  if (N_values.empty() && densities.empty())
    throw ConfigError("config: one of 'N' or 'density' is required");
  if (!N_values.empty() && !densities.empty())
    throw ConfigError("config: 'N' and 'density' are mutually exclusive");
  for (double d : densities)
    if (d < 0) throw ConfigError("config: densities must be >= 0");
  for (long N : N_values)
    if (N < 0) throw ConfigError("config: N must be >= 0");
  if (U_values.empty()) throw ConfigError("config: 'U' is required");
  constants.validate();
  if (hf.restarts < 0 || hf.max_iter < 1 || hf.tol <= 0 || hf.damping <= 0 ||
      hf.damping > 1)
    throw ConfigError("config: bad hf_* options");
}

ScanConfig parse_config_text(const std::string& text) {
  ScanConfig cfg;
  std::set<std::string> seen;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (!seen.insert(key).second)
      throw ConfigError("config: duplicate key '" + key + "'");
    if (val.empty())
      throw ConfigError("config: empty value for '" + key + "'");

    if (key == "lattice") {
      cfg.lattices = split_list(val);
    } else if (key == "L") {
      for (const auto& s : split_list(val))
        cfg.L_values.push_back(static_cast<int>(to_long(key, s)));
    } else if (key == "t") {
      cfg.t = to_double(key, val);
    } else if (key == "t_tooth") {
      cfg.t_tooth = to_double(key, val);
    } else if (key == "model") {
      cfg.model = val;
    } else if (key == "M") {
      cfg.M = static_cast<int>(to_long(key, val));
    } else if (key == "U_prime") {
      cfg.U_prime = to_double(key, val);
    } else if (key == "N") {
      for (const auto& s : split_list(val))
        cfg.N_values.push_back(to_long(key, s));
    } else if (key == "density") {
      for (const auto& s : split_list(val))
        cfg.densities.push_back(to_double(key, s));
    } else if (key == "U") {
      for (const auto& s : split_list(val))
        cfg.U_values.push_back(to_double(key, s));
    } else if (key == "U_log") {
      cfg.U_values = log_grid(key, val);
    } else if (key == "c1") {
      cfg.constants.c1 = to_double(key, val);
    } else if (key == "c2") {
      cfg.constants.c2 = to_double(key, val);
    } else if (key == "c3") {
      cfg.constants.c3 = to_double(key, val);
    } else if (key == "c_lemma3") {
      cfg.constants.c_lemma3 = to_double(key, val);
    } else if (key == "c_eps") {
      cfg.constants.c_eps = to_double(key, val);
    } else if (key == "fs_exponent") {
      cfg.constants.finite_size_exponent = to_double(key, val);
    } else if (key == "bound_only") {
      cfg.bound_only = to_bool(key, val);
    } else if (key == "hf_restarts") {
      cfg.hf.restarts = static_cast<int>(to_long(key, val));
    } else if (key == "hf_tol") {
      cfg.hf.tol = to_double(key, val);
    } else if (key == "hf_max_iter") {
      cfg.hf.max_iter = static_cast<int>(to_long(key, val));
    } else if (key == "hf_damping") {
      cfg.hf.damping = to_double(key, val);
    } else if (key == "seed") {
      cfg.seed = static_cast<std::uint64_t>(to_long(key, val));
      cfg.hf.seed = cfg.seed;
    } else if (key == "out_csv") {
      cfg.out_csv = val;
    } else if (key == "out_json") {
      cfg.out_json = val;
    } else {
      throw ConfigError("config: unknown key '" + key + "'");
    }
  }
  if (seen.count("U") && seen.count("U_log"))
    throw ConfigError("config: 'U' and 'U_log' are mutually exclusive");
  cfg.validate();
  return cfg;
}

ScanConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

}  // namespace hubb
