#ifndef HUBBOUND_CONFIG_HPP
#define HUBBOUND_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hubbound/bounds.hpp"
#include "hubbound/hf.hpp"

namespace hubb {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Flat key = value scan configuration. Unknown keys are hard errors.
struct ScanConfig {
  std::vector<std::string> lattices;  // lattice kind names
  std::vector<int> L_values;
  double t = 1.0;
  std::optional<double> t_tooth;
  std::string model = "singleband";
  int M = 1;
  std::optional<double> U_prime;      // mband only; defaults to U
  std::vector<long> N_values;
  std::vector<double> densities;      // alternative to N
  std::vector<double> U_values;
  BoundConstants constants;
  bool bound_only = false;
  HFOptions hf;
  std::uint64_t seed = 20240901;
  std::string out_csv;
  std::string out_json;

  void validate() const;
};

ScanConfig parse_config_file(const std::string& path);
ScanConfig parse_config_text(const std::string& text);

}  // namespace hubb

#endif
