#ifndef HUBBOUND_FOCKSPACE_HPP
#define HUBBOUND_FOCKSPACE_HPP

#include <cstdint>
#include <vector>

#include "hubbound/lattice.hpp"
#include "hubbound/model.hpp"

namespace hubb {

/// Bit-encoded occupation basis of a fixed-particle-number sector.
/// Orbital index = flavor * sites + site, one bit each; capacity 63 orbitals.
struct SectorBasis {
  int sites = 0;
  int flavors = 0;
  std::vector<int> counts;  // particles per flavor
  std::vector<std::uint64_t> states;  // strictly ascending

  std::size_t dim() const { return states.size(); }
  int total_particles() const;
  std::size_t index_of(std::uint64_t state) const;
};

SectorBasis enumerate_sector(int sites, int flavors,
                             const std::vector<int>& counts);

/// Sparse sector Hamiltonian: interaction diagonal plus signed hopping.
struct ManyBodyOperator {
  const SectorBasis* basis = nullptr;
  std::vector<double> diag;
  std::vector<std::size_t> row_ptr;
  std::vector<std::uint32_t> col;
  std::vector<double> val;

  std::size_t dim() const { return diag.size(); }
  void apply(const Vector& x, Vector& y) const;
  Matrix dense() const;
  /// energy scale used for tolerances
  double scale() const;
};

ManyBodyOperator assemble_hamiltonian(const Matrix& hopping,
                                      const ModelSpec& model,
                                      const SectorBasis& basis);
ManyBodyOperator assemble_hamiltonian(const Lattice& lat,
                                      const ModelSpec& model,
                                      const SectorBasis& basis);

struct GroundState {
  double energy = 0.0;
  Vector vec;
  int iterations = 0;
  double residual = 0.0;
};

/// Lowest eigenpair; dense solver below the dimension threshold, Lanczos
/// with full reorthogonalization above it.
GroundState ground_state(const ManyBodyOperator& op,
                         std::uint64_t seed = 12345,
                         std::size_t dense_threshold = 500);

struct SectorMinimum {
  double energy = 0.0;
  std::vector<int> counts;  // minimizing flavor split
};

/// E_gs(N) = min over flavor splits (N_1..N_F) of the sector ground energies.
SectorMinimum ground_state_energy(const Matrix& hopping, const ModelSpec& model,
                                  long N, std::uint64_t seed = 12345);
SectorMinimum ground_state_energy(const Lattice& lat, const ModelSpec& model,
                                  long N, std::uint64_t seed = 12345);

/// All flavor splits of N compatible with the sector capacity; symmetric
/// models are deduplicated up to flavor permutation.
std::vector<std::vector<int>> flavor_splits(int sites, const ModelSpec& model,
                                            long N);

}  // namespace hubb

#endif
