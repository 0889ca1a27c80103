#ifndef HUBBOUND_SCAN_HPP
#define HUBBOUND_SCAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "hubbound/bounds.hpp"
#include "hubbound/config.hpp"
#include "hubbound/fit.hpp"

namespace hubb {

/// One grid point of a parameter sweep. Energies are empty in bound-only
/// mode or when exact diagonalization is infeasible for the point.
struct ScanRow {
  std::string lattice;
  int L = 0;
  long sites = 0;
  std::string model;
  long N = 0;
  double n = 0.0;  // N / sites
  double U = 0.0;
  std::optional<double> E_gs;
  std::optional<double> E_hf;
  std::optional<double> dE;           // E_gs - E_hf
  std::optional<double> dE_per_site;
  std::optional<double> A_measured;
  std::optional<double> A_upper;
  std::optional<double> epsilon_used;
  std::optional<double> I_value;
  std::optional<double> delta_e_lower;      // per site
  std::optional<double> closed_form_value;  // per site
  std::string branch;
  std::optional<double> restart_spread;
  double seconds = 0.0;  // CSV only; excluded from JSON for determinism
  std::string error;
};

/// Runs the full grid. Per-row failures land in ScanRow::error and the scan
/// continues. Thread count comes from HUBBOUND_THREADS (default 1).
std::vector<ScanRow> run_scan(const ScanConfig& cfg);

std::string scan_csv_header();
std::string format_csv(const std::vector<ScanRow>& rows);
void emit_csv(const std::vector<ScanRow>& rows, const std::string& path);

/// JSON document: {"metadata": {...config echo, version...}, "rows": [...]}.
std::string format_json(const std::vector<ScanRow>& rows,
                        const ScanConfig& cfg);
void emit_json(const std::vector<ScanRow>& rows, const ScanConfig& cfg,
               const std::string& path);

/// Inverse of emit_csv on our own output.
std::vector<ScanRow> parse_scan_csv(const std::string& path);

/// Numeric column by header name; empty cells are skipped pairwise with
/// their partner column by the caller.
std::vector<std::string> csv_column(const std::string& path,
                                    const std::string& name);

/// Bound report with every constant and intermediate value named.
std::string bound_report_json(const BoundReport& rep);

/// Log-log scaling fit of |y| vs x over rows with y above the floor.
LinearFit fit_scaling(const std::vector<double>& x,
                      const std::vector<double>& y);

}  // namespace hubb

#endif
