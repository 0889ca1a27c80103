#include "hubbound/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace hubb {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int kind_dim(LatticeKind k) {
  switch (k) {
    case LatticeKind::Sc1d:
    case LatticeKind::Sawtooth:
      return 1;
    case LatticeKind::Sc2d:
    case LatticeKind::Square:
    case LatticeKind::Kagome:
      return 2;
    default:
      return 3;
  }
}

}  // namespace

void BoundConstants::validate() const {
  if (c1 <= 0 || c2 <= 0 || c3 <= 0 || c_lemma3 <= 0 || c_eps <= 0)
    throw std::invalid_argument("BoundConstants: all constants must be > 0");
}

std::string to_string(BoundBranch b) {
  switch (b) {
    case BoundBranch::BoundedDOS: return "bounded-DOS";
    case BoundBranch::LogSingular: return "log-singular";
    case BoundBranch::LnSquared: return "ln2-singular";
    case BoundBranch::FlatBand: return "flat-band";
  }
  throw std::logic_error("unreachable");
}

BoundBranch branch_for(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::Sc1d:
    case LatticeKind::Sc3d:
      return BoundBranch::BoundedDOS;
    case LatticeKind::Sc2d:
    case LatticeKind::Square:
      return BoundBranch::LogSingular;
    case LatticeKind::Bcc:
      return BoundBranch::LnSquared;
    case LatticeKind::Kagome:
    case LatticeKind::Sawtooth:
      return BoundBranch::FlatBand;
  }
  throw std::logic_error("unreachable");
}

double bootstrap_A(double U, double n, double eps, double I_value,
                   const BoundConstants& c) {
  c.validate();
  if (!(eps > 0.0))
    throw std::invalid_argument("bootstrap_A: eps must be positive");
  if (std::isinf(eps)) return std::sqrt(c.c2 * I_value);
  const double half_b = 0.5 * c.c1 * U * std::sqrt(n) / eps;
  return half_b + std::sqrt(half_b * half_b + c.c2 * I_value);
}

double flat_band_A(double U, double n, double eps, double w, double sites,
                   const BoundConstants& c) {
  c.validate();
  if (!(eps > 0.0))
    throw std::invalid_argument("flat_band_A: eps must be positive");
  const double half_b = std::isinf(eps)
                            ? 0.0
                            : 0.5 * c.c1 * U * std::sqrt(n) / eps;
  return half_b + std::sqrt(half_b * half_b + 4.0 * w * sites);
}

double delta_e_bound_from_A(double A_upper, double U, double n,
                            const BoundConstants& c) {
  c.validate();
  return -c.c_lemma3 * U * std::sqrt(n) * A_upper;
}

double choose_epsilon(double U, double n, const BoundConstants& c,
                      BoundBranch branch) {
  c.validate();
  if (branch == BoundBranch::FlatBand) return kInf;
  return c.c_eps * std::cbrt(n) * std::cbrt(U * U);
}

double closed_form_bound(LatticeKind kind, double U, double n,
                         double lattice_volume, const BoundConstants& c) {
  c.validate();
  if (kind == LatticeKind::Sc1d)
    throw std::invalid_argument("closed_form_bound: no closed form for sc1d");
  if (U == 0.0 || n == 0.0) return 0.0;
  const int d = kind_dim(kind);
  const double p = c.finite_size_exponent.value_or(-1.0 / (2.0 * d));
  const double bulk = std::pow(n, 2.0 / 3.0) * std::pow(U, 4.0 / 3.0);
  const double fs = std::sqrt(n) * U * std::pow(lattice_volume, p);
  const double lnu = std::abs(std::log(U));

  switch (branch_for(kind)) {
    case BoundBranch::BoundedDOS:
      return -(bulk + fs);
    case BoundBranch::LogSingular: {
      const double lv = std::abs(std::log(std::pow(lattice_volume, -0.5))) + 1.0;
      return -(bulk * (lnu + 1.0) +
               std::sqrt(n) * U * std::pow(lattice_volume, -0.25) * lv);
    }
    case BoundBranch::LnSquared:
      return -(bulk * (1.0 + lnu * lnu + lnu) +
               std::sqrt(n) * U * std::pow(lattice_volume, -1.0 / 6.0));
    case BoundBranch::FlatBand:
      return -U * std::sqrt(n * lattice_volume);
  }
  throw std::logic_error("unreachable");
}

BoundReport assemble_report(const Lattice& lat, long N, double U,
                            const BoundConstants& c) {
  c.validate();
  if (U < 0.0) throw std::invalid_argument("assemble_report: U >= 0");

  BoundReport rep;
  rep.kind = lat.kind;
  rep.L = lat.L;
  rep.sites = lat.site_count();
  rep.N = N;
  rep.n = static_cast<double>(N) / rep.sites;
  rep.U = U;
  rep.constants = c;
  rep.branch = branch_for(lat.kind);

  if (rep.branch == BoundBranch::FlatBand) {
    const FlatBand fb = flat_band_weight(lat);
    rep.epsilon_used = kInf;
    rep.I_value = fb.weight * rep.sites;
    rep.A_upper = flat_band_A(U, rep.n, kInf, fb.weight, rep.sites, c);
    rep.delta_e_lower = delta_e_bound_from_A(rep.A_upper, U, rep.n, c);
    rep.closed_form_value = closed_form_bound(lat.kind, U, rep.n, rep.sites, c);
    return rep;
  }

  const SpectrumTable spec = spectrum_table(lat);
  auto a_at = [&](double eps) {
    const double i_val = window_integral(spec, N, eps, c.c3, lat.L);
    return std::pair<double, double>(
        bootstrap_A(U, rep.n, eps, i_val, c), i_val);
  };

  // heuristic point plus a refined log-spaced grid search over eps
  double best_eps = choose_epsilon(U, rep.n, c, rep.branch);
  if (!(best_eps > 0.0)) best_eps = 1e-4 * lat.t;
  auto [best_a, best_i] = a_at(best_eps);

  double lo = 1e-4 * lat.t, hi = 1e2 * lat.t;
  for (int pass = 0; pass < 2; ++pass) {
    const int npts = 33;
    double pass_best_eps = best_eps;
    for (int i = 0; i < npts; ++i) {
      const double eps =
          lo * std::pow(hi / lo, static_cast<double>(i) / (npts - 1));
      auto [a, iv] = a_at(eps);
      if (a < best_a) {
        best_a = a;
        best_i = iv;
        pass_best_eps = eps;
      }
    }
    best_eps = pass_best_eps;
    const double step = std::pow(hi / lo, 1.0 / (npts - 1));
    lo = best_eps / step;
    hi = best_eps * step;
  }

  rep.epsilon_used = best_eps;
  rep.I_value = best_i;
  rep.A_upper = best_a;
  rep.delta_e_lower = delta_e_bound_from_A(rep.A_upper, U, rep.n, c);
  if (lat.kind != LatticeKind::Sc1d)
    rep.closed_form_value = closed_form_bound(lat.kind, U, rep.n, rep.sites, c);
  return rep;
}

}  // namespace hubb
