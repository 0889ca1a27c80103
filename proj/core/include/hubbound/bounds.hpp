#ifndef HUBBOUND_BOUNDS_HPP
#define HUBBOUND_BOUNDS_HPP

#include <optional>
#include <string>

#include "hubbound/lattice.hpp"
#include "hubbound/model.hpp"
#include "hubbound/spectrum.hpp"

namespace hubb {

/// Every undetermined constant of the inequality chain, an explicit
/// parameter. None of them is fixed by the source analysis; defaults are 1.
struct BoundConstants {
  double c1 = 1.0;
  double c2 = 1.0;
  double c3 = 1.0;
  double c_lemma3 = 1.0;
  double c_eps = 1.0;  // prefactor of the eps = c * n^{1/3} U^{2/3} heuristic
  /// Exponent of the finite-size term |Lambda|^p in the closed forms.
  /// Defaults to -1/(2d) when unset.
  std::optional<double> finite_size_exponent;

  void validate() const;
};

enum class BoundBranch { BoundedDOS, LogSingular, LnSquared, FlatBand };

std::string to_string(BoundBranch b);
BoundBranch branch_for(LatticeKind kind);

/// Larger root of A^2 = (c1 U sqrt(n) / eps) A + c2 I.
/// eps may be +infinity (flat-band limit), giving sqrt(c2 I).
double bootstrap_A(double U, double n, double eps, double I_value,
                   const BoundConstants& c);

/// Flat-band specialization with the idealized window mass w|Lambda|;
/// at eps = infinity this is exactly 2 sqrt(w |Lambda|).
double flat_band_A(double U, double n, double eps, double w, double sites,
                   const BoundConstants& c);

/// Lower bound on Delta E per site from an upper bound on A.
double delta_e_bound_from_A(double A_upper, double U, double n,
                            const BoundConstants& c);

/// Heuristic eps per branch: c_eps n^{1/3} U^{2/3}, or infinity for the
/// flat-band branch.
double choose_epsilon(double U, double n, const BoundConstants& c,
                      BoundBranch branch);

/// Closed-form lower bound on Delta E per site for the four lattice classes.
/// Throws for kinds without a closed form (sc1d).
double closed_form_bound(LatticeKind kind, double U, double n,
                         double lattice_volume, const BoundConstants& c);

struct BoundReport {
  LatticeKind kind = LatticeKind::Sc1d;
  int L = 0;
  long sites = 0;
  long N = 0;
  double n = 0.0;
  double U = 0.0;
  BoundConstants constants;
  BoundBranch branch = BoundBranch::BoundedDOS;
  double epsilon_used = 0.0;
  double I_value = 0.0;
  double A_upper = 0.0;
  double delta_e_lower = 0.0;  // per site, <= 0
  std::optional<double> closed_form_value;
};

/// Chains spectrum -> Fermi energy -> window integral -> eps choice ->
/// bootstrap -> Delta E bound; non-flat branches grid-search eps.
BoundReport assemble_report(const Lattice& lat, long N, double U,
                            const BoundConstants& c);

}  // namespace hubb

#endif
