#ifndef HUBBOUND_DENSOPS_HPP
#define HUBBOUND_DENSOPS_HPP

#include <vector>

#include "hubbound/fockspace.hpp"
#include "hubbound/lattice.hpp"

namespace hubb {

/// 1-pdo gamma(k,l) = <Psi| c^dag_k c_l |Psi> in the site-flavor basis;
/// real symmetric for the real states produced here.
Matrix one_pdo(const Vector& psi, const SectorBasis& basis);

/// Projector onto the N lowest-filled spin orbitals of T1 = -hopping,
/// flavors filled as balanced as possible (first flavors get the remainder).
/// Degenerate shells are resolved in deterministic eigenvector order.
Matrix free_gamma0(const Matrix& hopping, int flavors, long N);
Matrix free_gamma0(const Lattice& lat, long N);  // spin-1/2, flavors = 2

/// Per-site pair densities Tr_2[(X_x (x) X_x) Gamma] = sum_{k != l in x}
/// <n_k n_l>; for the single-band model this is 2<n_{x+} n_{x-}>.
std::vector<double> two_pdo_site_contractions(const Vector& psi,
                                              const SectorBasis& basis);

/// Tr_2(Gamma) = <N(N-1)> computed by direct pair enumeration.
double two_pdo_trace(const Vector& psi, const SectorBasis& basis);

/// Slater-determinant state in a fixed sector. `orbitals[f]` holds the
/// sites x (columns = orbitals) occupied in flavor f; amplitudes are the
/// determinants of the corresponding sub-matrices.
Vector slater_state(const SectorBasis& basis,
                    const std::vector<Matrix>& orbitals);

/// Site contraction of A_2(gamma (x) gamma): Tr[X gamma]^2 - Tr[X gamma X gamma].
std::vector<double> slater_site_contractions(const Matrix& gamma, int sites);

/// Traces entering the correlation-inequality chain, per site, plus the
/// measured overlap deficit A = sqrt(Tr[(1-gamma_gs) gamma_0] / |Lambda|).
struct LemmaReport {
  double A_measured = 0.0;
  double tr_1mgs_g0 = 0.0;
  std::vector<double> tr_x_g0;
  std::vector<double> tr_x_ggs;
  std::vector<double> tr_x_g0_x_g0;
  std::vector<double> tr_x_q_ggs_q;  // Tr[X (1-g0) g_gs (1-g0)]
};

LemmaReport lemma_contractions(const Matrix& gamma_gs, const Matrix& gamma0,
                               int sites);

}  // namespace hubb

#endif
