#include "hubbound/model.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace hubb {

ModelSpec ModelSpec::single_band(double U) {
  ModelSpec m;
  m.variant = Variant::SingleBand;
  m.M = 1;
  m.U = U;
  m.U_prime = U;
  return m;
}

ModelSpec ModelSpec::m_band(int M, double U, double U_prime) {
  if (M < 1) throw std::invalid_argument("ModelSpec: M >= 1");
  if (U < 0.0 || U_prime < 0.0)
    throw std::invalid_argument("ModelSpec: couplings must be >= 0");
  ModelSpec m;
  m.variant = Variant::MBand;
  m.M = M;
  m.U = U;
  m.U_prime = U_prime;
  return m;
}

ModelSpec ModelSpec::su_m(int M, double U) {
  if (M < 1) throw std::invalid_argument("ModelSpec: M >= 1");
  if (U < 0.0) throw std::invalid_argument("ModelSpec: U must be >= 0");
  ModelSpec m;
  m.variant = Variant::SUM;
  m.M = M;
  m.U = U;
  m.U_prime = U;
  return m;
}

ModelSpec ModelSpec::from_name(const std::string& name, int M, double U,
                               double U_prime) {
  if (name == "singleband") return single_band(U);
  if (name == "mband") return m_band(M, U, U_prime);
  if (name == "sum") return su_m(M, U);
  throw std::invalid_argument("ModelSpec: unknown variant " + name);
}

int ModelSpec::flavor_count() const {
  switch (variant) {
    case Variant::SingleBand: return 2;
    case Variant::MBand: return 2 * M;
    case Variant::SUM: return M;
  }
  throw std::logic_error("unreachable");
}

bool ModelSpec::has_projector_form() const {
  switch (variant) {
    case Variant::SingleBand:
    case Variant::SUM:
      return true;
    case Variant::MBand:
      return U == U_prime;
  }
  throw std::logic_error("unreachable");
}

double ModelSpec::projector_coupling() const {
  if (!has_projector_form())
    throw std::invalid_argument(
        "projector form requires U == U' for the M-band model");
  // SingleBand: U*n+n- = (U/2)*k(k-1) for k in {0,1,2}; the ordered-pair
  // variants carry twice that coefficient.
  return variant == Variant::SingleBand ? U : 2.0 * U;
}

double ModelSpec::interaction_energy(std::uint64_t state, int sites) const {
  double e = 0.0;
  switch (variant) {
    case Variant::SingleBand: {
      const std::uint64_t mask =
          sites >= 64 ? ~0ull : ((1ull << sites) - 1ull);
      const std::uint64_t up = state & mask;
      const std::uint64_t down = (state >> sites) & mask;
      e = U * std::popcount(up & down);
      break;
    }
    case Variant::SUM: {
      for (int x = 0; x < sites; ++x) {
        int k = 0;
        for (int m = 0; m < M; ++m)
          k += (state >> (m * sites + x)) & 1ull;
        e += U * k * (k - 1);  // ordered flavor pairs
      }
      break;
    }
    case Variant::MBand: {
      for (int x = 0; x < sites; ++x) {
        if (U == U_prime) {
          int k = 0;
          for (int f = 0; f < 2 * M; ++f)
            k += (state >> (f * sites + x)) & 1ull;
          e += U * k * (k - 1);
        } else {
          int k = 0, sum_s2 = 0, pairs_same = 0;
          for (int a = 0; a < M; ++a) {
            const int nu = (state >> ((2 * a) * sites + x)) & 1ull;
            const int nd = (state >> ((2 * a + 1) * sites + x)) & 1ull;
            const int s = nu + nd;
            k += s;
            sum_s2 += s * s;
            pairs_same += nu * nd;
          }
          e += U * pairs_same + U_prime * (k * k - sum_s2);
        }
      }
      break;
    }
  }
  return e;
}

std::string ModelSpec::name() const {
  switch (variant) {
    case Variant::SingleBand: return "singleband";
    case Variant::MBand: return "mband";
    case Variant::SUM: return "sum";
  }
  throw std::logic_error("unreachable");
}

}  // namespace hubb
