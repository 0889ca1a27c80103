#ifndef HUBBOUND_LATTICE_HPP
#define HUBBOUND_LATTICE_HPP

#include <Eigen/Dense>
#include <array>
#include <map>
#include <string>
#include <vector>

namespace hubb {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using CMatrix = Eigen::MatrixXcd;

enum class LatticeKind { Sc1d, Sc2d, Sc3d, Square, Bcc, Kagome, Sawtooth };

LatticeKind lattice_kind_from_name(const std::string& name);
std::string to_string(LatticeKind kind);

/// Momentum on the finite grid k_i = pi*m_i/L, m_i in [-L, L-1].
struct KPoint {
  std::array<double, 3> k{0.0, 0.0, 0.0};
  int dim = 1;
};

/// One undirected hopping bond: cell (R, sub_a) <-> cell (R+offset, sub_b).
/// `amplitude` is the entry of the hopping matrix t_{x,y}; the one-particle
/// operator is T1 = -t.
struct Bond {
  int sub_a = 0;
  int sub_b = 0;
  std::array<int, 3> offset{0, 0, 0};
  double amplitude = 0.0;
};

struct Lattice {
  LatticeKind kind = LatticeKind::Sc1d;
  int L = 1;        // lattice spans 2L cells per direction (torus)
  int dim = 1;
  int basis = 1;    // sites per unit cell
  double t = 1.0;
  std::map<std::string, double> extra;
  std::vector<Bond> bonds;

  int side() const { return 2 * L; }
  long cell_count() const;
  long site_count() const;

  /// site index = cell_index * basis + sub, cells in row-major order
  long site_index(const std::array<int, 3>& cell, int sub) const;
  std::array<int, 3> cell_coords(long cell_index) const;

  /// Dense real-symmetric hopping matrix t_{x,y} on the torus.
  Matrix hopping_matrix() const;

  /// All (2L)^d momenta of the first Brillouin zone.
  std::vector<KPoint> bz_grid() const;

  /// basis x basis Bloch matrix of T1 = -t at momentum k.
  CMatrix bloch_matrix(const KPoint& k) const;
};

/// Builds a lattice with its periodic hopping matrix populated. Recognized
/// extra amplitudes: "t_tooth" for the sawtooth chain (defaults to sqrt(2)*t,
/// the flat-lower-band tuning).
Lattice build_lattice(LatticeKind kind, int L, double t,
                      const std::map<std::string, double>& extra = {});

/// Analytic band energy for single-site-cell lattices.
double dispersion(LatticeKind kind, const KPoint& k, double t);

/// Ascending eigenvalues of the Bloch matrix; requires basis >= 2.
std::vector<double> bloch_bands(const Lattice& lat, const KPoint& k);

/// Max deviation between dense-diagonalization eigenvalues of T1 and the
/// analytic spectrum collected over the BZ grid.
double fourier_check(const Lattice& lat);

}  // namespace hubb

#endif
