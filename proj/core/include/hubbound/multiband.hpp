#ifndef HUBBOUND_MULTIBAND_HPP
#define HUBBOUND_MULTIBAND_HPP

#include <vector>

#include "hubbound/fockspace.hpp"

namespace hubb {

/// Sorted full spectrum of one sector.
std::vector<double> sector_spectrum(const Matrix& hopping,
                                    const ModelSpec& model,
                                    const std::vector<int>& counts);

struct ReductionReport {
  double max_dev_su2 = 0.0;    // SUM{M=2, U/2} vs SingleBand{U}
  double max_dev_mband = 0.0;  // MBand{M=1, U, U'} vs SingleBand{U}
  bool ok = false;
};

/// Verifies the reduction identities on every (N_+, N_-) sector of the
/// given lattice; throws past tolerance, which signals an assembly bug.
ReductionReport reduction_check(const Lattice& lat, long N_max, double U,
                                double tolerance = 1e-10);

}  // namespace hubb

#endif
