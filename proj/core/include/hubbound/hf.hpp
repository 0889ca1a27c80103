#ifndef HUBBOUND_HF_HPP
#define HUBBOUND_HF_HPP

#include <cstdint>
#include <vector>

#include "hubbound/lattice.hpp"
#include "hubbound/model.hpp"

namespace hubb {

struct HFOptions {
  int restarts = 8;         // random restarts on top of the structured ones
  double tol = 1e-9;        // commutator tolerance, scaled by (t + U)
  int max_iter = 500;
  double damping = 0.7;     // initial mixing, halved on energy increase
  std::uint64_t seed = 20240901;
};

struct HFResult {
  double energy = 0.0;
  Matrix gamma;             // rank-N projector
  int iterations = 0;
  double residual = 0.0;    // max-norm of [F(gamma), gamma]
  int winner = -1;          // index of the winning initialization
  bool converged = false;
  std::vector<double> restart_energies;
  double restart_spread = 0.0;  // max - min over converged restarts
};

/// Hartree-Fock energy functional Tr(T1 gamma) + (U_eff/2) sum_x
/// (Tr[X_x gamma]^2 - Tr[X_x gamma X_x gamma]) for projector-form models.
double hf_energy(const Matrix& gamma, const Matrix& hopping,
                 const ModelSpec& model);

/// Fock operator T1 + U_eff sum_x (Tr[X_x gamma] X_x - X_x gamma X_x).
Matrix fock_matrix(const Matrix& gamma, const Matrix& hopping,
                   const ModelSpec& model);

/// Best SCF stationary point over restarts (free, Neel, polarized, random).
HFResult scf_solve(const Matrix& hopping, long N, const ModelSpec& model,
                   const HFOptions& opts = {});
HFResult scf_solve(const Lattice& lat, long N, const ModelSpec& model,
                   const HFOptions& opts = {});

struct DeltaEReport {
  double e_gs = 0.0;
  double e_hf = 0.0;
  double delta_e = 0.0;  // e_gs - e_hf, <= 0 up to solver tolerance
};

DeltaEReport delta_e(const Lattice& lat, long N, const ModelSpec& model,
                     const HFOptions& opts = {});
DeltaEReport delta_e(const Matrix& hopping, long N, const ModelSpec& model,
                     const HFOptions& opts = {});

}  // namespace hubb

#endif
