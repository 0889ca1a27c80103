#include "hubbound/multiband.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hubb {

std::vector<double> sector_spectrum(const Matrix& hopping,
                                    const ModelSpec& model,
                                    const std::vector<int>& counts) {
  SectorBasis basis =
      enumerate_sector(static_cast<int>(hopping.rows()),
                       model.flavor_count(), counts);
  ManyBodyOperator op = assemble_hamiltonian(hopping, model, basis);
  Eigen::SelfAdjointEigenSolver<Matrix> es(op.dense());
  std::vector<double> vals(es.eigenvalues().data(),
                           es.eigenvalues().data() + basis.dim());
  return vals;
}

ReductionReport reduction_check(const Lattice& lat, long N_max, double U,
                                double tolerance) {
  const Matrix hopping = lat.hopping_matrix();
  const int sites = static_cast<int>(lat.site_count());

  const ModelSpec single = ModelSpec::single_band(U);
  const ModelSpec su2 = ModelSpec::su_m(2, U / 2.0);
  // U' != U keeps the general M-band assembly path exercised
  const ModelSpec mb1 = ModelSpec::m_band(1, U, 0.37 * U + 0.1);

  ReductionReport rep;
  for (long N = 0; N <= std::min<long>(N_max, 2 * sites); ++N) {
    for (int up = 0; up <= std::min<long>(N, sites); ++up) {
      const int down = static_cast<int>(N) - up;
      if (down < 0 || down > sites) continue;
      const std::vector<int> counts{up, down};
      auto a = sector_spectrum(hopping, single, counts);
      auto b = sector_spectrum(hopping, su2, counts);
      auto c = sector_spectrum(hopping, mb1, counts);
      for (size_t i = 0; i < a.size(); ++i) {
        rep.max_dev_su2 = std::max(rep.max_dev_su2, std::abs(a[i] - b[i]));
        rep.max_dev_mband = std::max(rep.max_dev_mband, std::abs(a[i] - c[i]));
      }
    }
  }
  rep.ok = rep.max_dev_su2 <= tolerance && rep.max_dev_mband <= tolerance;
  if (!rep.ok)
    throw std::runtime_error("reduction_check: model spectra disagree");
  return rep;
}

}  // namespace hubb
