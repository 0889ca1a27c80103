#include "hubbound/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace hubb {

namespace {

double two_pi_pow(int d) {
  double w = 1.0;
  for (int i = 0; i < d; ++i) w *= 2.0 * M_PI;
  return w;
}

/// Complete elliptic integral K(m), parameter convention, via AGM.
double elliptic_k_param(double m) {
  if (m >= 1.0 || m < 0.0)
    throw std::domain_error("elliptic_k_param: need 0 <= m < 1");
  double a = 1.0;
  double b = std::sqrt(1.0 - m);
  while (std::abs(a - b) > 1e-15 * a) {
    double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return M_PI / (2.0 * a);
}

}  // namespace

double SpectrumTable::orbital_weight() const {
  return two_pi_pow(dim) / static_cast<double>(orbitals);
}

SpectrumTable spectrum_table(const Lattice& lat) {
  std::vector<double> raw;
  raw.reserve(lat.site_count());
  for (const KPoint& k : lat.bz_grid()) {
    if (lat.basis == 1) {
      raw.push_back(dispersion(lat.kind, k, lat.t));
    } else {
      for (double e : bloch_bands(lat, k)) raw.push_back(e);
    }
  }
  std::sort(raw.begin(), raw.end());

  SpectrumTable spec;
  spec.orbitals = lat.site_count();
  spec.dim = lat.dim;
  spec.cells = lat.cell_count();
  spec.t = lat.t;

  const double tol = 1e-12 * std::max(1.0, std::abs(lat.t));
  for (double v : raw) {
    if (!spec.values.empty() && v - spec.values.back() <= tol) {
      ++spec.multiplicity.back();
    } else {
      spec.values.push_back(v);
      spec.multiplicity.push_back(1);
    }
  }
  return spec;
}

double fermi_energy(const SpectrumTable& spec, long N) {
  if (N < 1 || N > 2 * spec.orbitals)
    throw std::out_of_range("fermi_energy: N out of range");
  const long j = (N + 1) / 2;  // ceil(N/2)-th orbital, 1-indexed
  long seen = 0;
  for (size_t i = 0; i < spec.values.size(); ++i) {
    seen += spec.multiplicity[i];
    if (seen >= j) return spec.values[i];
  }
  throw std::logic_error("fermi_energy: multiplicities inconsistent");
}

DOSCurve dos_histogram(const SpectrumTable& spec, int bins) {
  const double pad = 1e-9 * std::max(1.0, spec.bandwidth());
  return dos_histogram(spec, bins, spec.min() - pad, spec.max() + pad);
}

DOSCurve dos_histogram(const SpectrumTable& spec, int bins, double lo,
                       double hi) {
  if (bins < 1) throw std::invalid_argument("dos_histogram: bins >= 1");
  if (!(hi > lo)) throw std::invalid_argument("dos_histogram: empty range");
  DOSCurve dos;
  dos.edges.resize(bins + 1);
  dos.density.assign(bins, 0.0);
  const double width = (hi - lo) / bins;
  for (int i = 0; i <= bins; ++i) dos.edges[i] = lo + i * width;

  const double w = spec.orbital_weight();
  for (size_t i = 0; i < spec.values.size(); ++i) {
    const double v = spec.values[i];
    if (v < lo || v >= hi) continue;
    int b = static_cast<int>((v - lo) / width);
    if (b == bins) b = bins - 1;
    dos.density[b] += w * spec.multiplicity[i];
  }
  for (int b = 0; b < bins; ++b) dos.density[b] /= width;
  dos.total_weight = two_pi_pow(spec.dim);
  return dos;
}

void write_dos_csv(const DOSCurve& dos, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_dos_csv: cannot open " + path);
  out << "E_lo,E_hi,rho\n";
  char buf[128];
  for (size_t b = 0; b + 1 < dos.edges.size(); ++b) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", dos.edges[b],
                  dos.edges[b + 1], dos.density[b]);
    out << buf;
  }
}

double window_integral(const SpectrumTable& spec, long N, double eps, double c3,
                       int L) {
  if (eps < 0.0) throw std::invalid_argument("window_integral: eps >= 0");
  const double ef = fermi_energy(spec, N);
  const double lo = ef - eps - c3 / L;
  const double hi = ef + c3 / L;
  const double tol = 1e-10 * std::max(1.0, spec.bandwidth());
  const double w = spec.orbital_weight();
  double sum = 0.0;
  for (size_t i = 0; i < spec.values.size(); ++i) {
    const double v = spec.values[i];
    if (v >= lo - tol && v <= hi + tol) sum += w * spec.multiplicity[i];
  }
  return sum;
}

double asymptotic_dos(LatticeKind kind, double E, double t) {
  switch (kind) {
    case LatticeKind::Square:
    case LatticeKind::Sc2d: {
      const double r = E / (4.0 * t);
      if (std::abs(r) > 1.0)
        throw std::domain_error("asymptotic_dos: E outside square band");
      const double m = 1.0 - r * r;
      if (m >= 1.0)
        throw std::domain_error("asymptotic_dos: E = 0 is the singular point");
      return elliptic_k_param(m) / (2.0 * std::abs(t) * M_PI * M_PI);
    }
    case LatticeKind::Bcc: {
      const double r = std::abs(E) / (8.0 * t);
      if (r >= 1.0) throw std::domain_error("asymptotic_dos: E outside bcc band");
      if (r == 0.0)
        throw std::domain_error("asymptotic_dos: E = 0 is the singular point");
      const double l = std::log(r);
      return l * l / std::pow(4.0 * M_PI, 3);
    }
    default:
      throw std::invalid_argument("asymptotic_dos: no analytic form for kind");
  }
}

FlatBand flat_band_weight(const Lattice& lat) {
  if (lat.basis < 2)
    throw std::invalid_argument("flat_band_weight: lattice has no subbands");
  const auto grid = lat.bz_grid();
  const int nb = lat.basis;
  std::vector<double> bmin(nb, std::numeric_limits<double>::infinity());
  std::vector<double> bmax(nb, -std::numeric_limits<double>::infinity());
  for (const KPoint& k : grid) {
    auto bands = bloch_bands(lat, k);
    for (int b = 0; b < nb; ++b) {
      bmin[b] = std::min(bmin[b], bands[b]);
      bmax[b] = std::max(bmax[b], bands[b]);
    }
  }
  const double tol = 1e-12 * std::max(1.0, std::abs(lat.t));
  FlatBand fb;
  for (int b = 0; b < nb; ++b) {
    if (bmax[b] - bmin[b] < tol) {
      fb.energy = 0.5 * (bmin[b] + bmax[b]);
      fb.count += static_cast<long>(grid.size());
    }
  }
  if (fb.count == 0)
    throw std::runtime_error("flat_band_weight: no flat subband found");
  fb.weight = static_cast<double>(fb.count) / lat.site_count();
  return fb;
}

}  // namespace hubb
