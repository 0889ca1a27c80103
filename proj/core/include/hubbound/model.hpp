#ifndef HUBBOUND_MODEL_HPP
#define HUBBOUND_MODEL_HPP

#include <cstdint>
#include <string>

namespace hubb {

/// Interaction variant. Flavor orbitals are indexed f*sites + x with
///   SingleBand: f in {up, down}
///   MBand:      f = 2*a + s, band a in [0,M), spin s in {0,1}
///   SUM:        f = m in [0,M)
/// The M-band model with U == U_prime and the SU(M) model count ordered
/// flavor pairs on a site, so a site holding k particles contributes
/// U*k*(k-1). The general (U != U_prime) M-band rule keeps the same-band
/// and cross-band couplings separate.
struct ModelSpec {
  enum class Variant { SingleBand, MBand, SUM };

  Variant variant = Variant::SingleBand;
  int M = 1;
  double U = 0.0;
  double U_prime = 0.0;

  static ModelSpec single_band(double U);
  static ModelSpec m_band(int M, double U, double U_prime);
  static ModelSpec su_m(int M, double U);
  static ModelSpec from_name(const std::string& name, int M, double U,
                             double U_prime);

  int flavor_count() const;

  /// True when the interaction has the per-site projector form
  /// V2 = U_eff * sum_x X_x (x) X_x used by the HF functional and the bounds.
  bool has_projector_form() const;

  /// Effective coupling of the projector form: (U_eff/2) * k*(k-1) per site
  /// reproduces the interaction diagonal.
  double projector_coupling() const;

  /// Diagonal interaction energy of one occupation configuration.
  double interaction_energy(std::uint64_t state, int sites) const;

  std::string name() const;
};

}  // namespace hubb

#endif
