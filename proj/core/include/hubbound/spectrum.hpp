#ifndef HUBBOUND_SPECTRUM_HPP
#define HUBBOUND_SPECTRUM_HPP

#include <string>
#include <vector>

#include "hubbound/lattice.hpp"

namespace hubb {

/// Sorted free one-particle levels with orbital multiplicities (spin
/// degeneracy is applied downstream). Levels closer than the dedup
/// tolerance are merged.
struct SpectrumTable {
  std::vector<double> values;      // strictly ascending after dedup
  std::vector<long> multiplicity;  // sums to orbitals
  long orbitals = 0;               // = |Lambda|
  int dim = 1;
  long cells = 0;
  double t = 1.0;

  double min() const { return values.front(); }
  double max() const { return values.back(); }
  double bandwidth() const { return max() - min(); }
  /// DOS weight carried by one orbital, (2pi)^d / |Lambda|.
  double orbital_weight() const;
};

struct DOSCurve {
  std::vector<double> edges;    // size bins+1
  std::vector<double> density;  // states per energy, size bins
  double total_weight = 0.0;    // = (2pi)^d
};

/// Eigenvalues of T1 collected over the BZ grid, ascending.
SpectrumTable spectrum_table(const Lattice& lat);

/// Highest occupied orbital energy when N particles fill levels ascending
/// with spin degeneracy 2 and the balanced split N_+ = ceil(N/2).
double fermi_energy(const SpectrumTable& spec, long N);

DOSCurve dos_histogram(const SpectrumTable& spec, int bins);
DOSCurve dos_histogram(const SpectrumTable& spec, int bins, double lo, double hi);

void write_dos_csv(const DOSCurve& dos, const std::string& path);

/// Exact level-count evaluation of I(eps, L; n): the DOS weight in
/// [eF - eps - c3/L, eF + c3/L]. Pass eps = infinity for the full window.
double window_integral(const SpectrumTable& spec, long N, double eps, double c3,
                       int L);

/// Analytic / asymptotic densities used to cross-check histograms:
/// square-lattice elliptic-K form and the bcc ln^2 asymptote.
double asymptotic_dos(LatticeKind kind, double E, double t);

/// Value of the k-independent subband and its orbital count (band-resolved,
/// so a dispersive band touching the flat one is not counted).
struct FlatBand {
  double energy = 0.0;
  long count = 0;     // orbitals in the flat band = number of cells
  double weight = 0;  // count / |Lambda|
};
FlatBand flat_band_weight(const Lattice& lat);

}  // namespace hubb

#endif
