#include "hubbound/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace hubb {

namespace {

constexpr std::complex<double> I{0.0, 1.0};

int kind_dim(LatticeKind k) {
  switch (k) {
    case LatticeKind::Sc1d:
    case LatticeKind::Sawtooth:
      return 1;
    case LatticeKind::Sc2d:
    case LatticeKind::Square:
    case LatticeKind::Kagome:
      return 2;
    case LatticeKind::Sc3d:
    case LatticeKind::Bcc:
      return 3;
  }
  throw std::logic_error("unreachable");
}

int kind_basis(LatticeKind k) {
  switch (k) {
    case LatticeKind::Kagome:
      return 3;
    case LatticeKind::Sawtooth:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

LatticeKind lattice_kind_from_name(const std::string& name) {
  if (name == "sc1d") return LatticeKind::Sc1d;
  if (name == "sc2d") return LatticeKind::Sc2d;
  if (name == "sc3d") return LatticeKind::Sc3d;
  if (name == "square") return LatticeKind::Square;
  if (name == "bcc") return LatticeKind::Bcc;
  if (name == "kagome") return LatticeKind::Kagome;
  if (name == "sawtooth") return LatticeKind::Sawtooth;
  throw std::invalid_argument("unknown lattice kind: " + name);
}

std::string to_string(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::Sc1d: return "sc1d";
    case LatticeKind::Sc2d: return "sc2d";
    case LatticeKind::Sc3d: return "sc3d";
    case LatticeKind::Square: return "square";
    case LatticeKind::Bcc: return "bcc";
    case LatticeKind::Kagome: return "kagome";
    case LatticeKind::Sawtooth: return "sawtooth";
  }
  throw std::logic_error("unreachable");
}

long Lattice::cell_count() const {
  long c = 1;
  for (int i = 0; i < dim; ++i) c *= side();
  return c;
}

long Lattice::site_count() const { return basis * cell_count(); }

long Lattice::site_index(const std::array<int, 3>& cell, int sub) const {
  const int s = side();
  long idx = 0;
  for (int i = dim - 1; i >= 0; --i) {
    int c = ((cell[i] % s) + s) % s;
    idx = idx * s + c;
  }
  return idx * basis + sub;
}

std::array<int, 3> Lattice::cell_coords(long cell_index) const {
  std::array<int, 3> c{0, 0, 0};
  const int s = side();
  for (int i = 0; i < dim; ++i) {
    c[i] = static_cast<int>(cell_index % s);
    cell_index /= s;
  }
  return c;
}

Matrix Lattice::hopping_matrix() const {
  const long n = site_count();
  Matrix m = Matrix::Zero(n, n);
  const long cells = cell_count();
  for (long ci = 0; ci < cells; ++ci) {
    const auto c = cell_coords(ci);
    for (const Bond& b : bonds) {
      std::array<int, 3> c2 = c;
      for (int i = 0; i < dim; ++i) c2[i] += b.offset[i];
      const long x = ci * basis + b.sub_a;
      const long y = site_index(c2, b.sub_b);
      m(x, y) += b.amplitude;
      m(y, x) += b.amplitude;
    }
  }
  return m;
}

std::vector<KPoint> Lattice::bz_grid() const {
  std::vector<KPoint> grid;
  grid.reserve(cell_count());
  const int s = side();
  std::array<int, 3> m{0, 0, 0};
  for (long ci = 0; ci < cell_count(); ++ci) {
    long rest = ci;
    for (int i = 0; i < dim; ++i) {
      m[i] = static_cast<int>(rest % s) - L;  // in [-L, L-1]
      rest /= s;
    }
    KPoint kp;
    kp.dim = dim;
    for (int i = 0; i < dim; ++i) kp.k[i] = M_PI * m[i] / L;
    grid.push_back(kp);
  }
  return grid;
}

CMatrix Lattice::bloch_matrix(const KPoint& k) const {
  CMatrix h = CMatrix::Zero(basis, basis);
  for (const Bond& b : bonds) {
    double phase = 0.0;
    for (int i = 0; i < dim; ++i) phase += k.k[i] * b.offset[i];
    const std::complex<double> e = std::exp(I * phase);
    h(b.sub_a, b.sub_b) += -b.amplitude * e;
    h(b.sub_b, b.sub_a) += -b.amplitude * std::conj(e);
  }
  return h;
}

Lattice build_lattice(LatticeKind kind, int L, double t,
                      const std::map<std::string, double>& extra) {
  if (L < 1) throw std::invalid_argument("build_lattice: L must be >= 1");
  if (t <= 0.0) throw std::invalid_argument("build_lattice: t must be > 0");
  for (const auto& [key, val] : extra) {
    if (key != "t_tooth")
      throw std::invalid_argument("build_lattice: unknown amplitude " + key);
    (void)val;
  }

  Lattice lat;
  lat.kind = kind;
  lat.L = L;
  lat.dim = kind_dim(kind);
  lat.basis = kind_basis(kind);
  lat.t = t;
  lat.extra = extra;

  switch (kind) {
    case LatticeKind::Sc1d:
    case LatticeKind::Sc2d:
    case LatticeKind::Sc3d:
    case LatticeKind::Square:
      for (int i = 0; i < lat.dim; ++i) {
        Bond b;
        b.offset[i] = 1;
        b.amplitude = t;
        lat.bonds.push_back(b);
      }
      break;
    case LatticeKind::Bcc:
      // eight body-diagonal neighbours; four undirected bonds
      for (int s2 : {1, -1})
        for (int s3 : {1, -1})
          lat.bonds.push_back(Bond{0, 0, {1, s2, s3}, t});
      break;
    case LatticeKind::Kagome:
      // subs 0,1,2; intra-cell triangle plus the three inter-cell bonds
      lat.bonds.push_back(Bond{0, 1, {0, 0, 0}, t});
      lat.bonds.push_back(Bond{0, 2, {0, 0, 0}, t});
      lat.bonds.push_back(Bond{1, 2, {0, 0, 0}, t});
      lat.bonds.push_back(Bond{0, 1, {-1, 0, 0}, t});
      lat.bonds.push_back(Bond{0, 2, {0, -1, 0}, t});
      lat.bonds.push_back(Bond{1, 2, {1, -1, 0}, t});
      break;
    case LatticeKind::Sawtooth: {
      // sub 0 = base chain, sub 1 = tooth. The base amplitude carries the
      // opposite sign so that the flat subband is the bottom one.
      double tp = std::sqrt(2.0) * t;
      auto it = extra.find("t_tooth");
      if (it != extra.end()) tp = it->second;
      lat.extra["t_tooth"] = tp;
      lat.bonds.push_back(Bond{0, 0, {1, 0, 0}, -t});
      lat.bonds.push_back(Bond{0, 1, {0, 0, 0}, tp});
      lat.bonds.push_back(Bond{1, 0, {1, 0, 0}, tp});
      break;
    }
  }
  return lat;
}

double dispersion(LatticeKind kind, const KPoint& k, double t) {
  switch (kind) {
    case LatticeKind::Sc1d:
      return -2.0 * t * std::cos(k.k[0]);
    case LatticeKind::Sc2d:
    case LatticeKind::Square:
      return -2.0 * t * (std::cos(k.k[0]) + std::cos(k.k[1]));
    case LatticeKind::Sc3d:
      return -2.0 * t * (std::cos(k.k[0]) + std::cos(k.k[1]) + std::cos(k.k[2]));
    case LatticeKind::Bcc:
      return -8.0 * t * std::cos(k.k[0]) * std::cos(k.k[1]) * std::cos(k.k[2]);
    default:
      throw std::invalid_argument(
          "dispersion: multi-site-cell lattice, use bloch_bands");
  }
}

std::vector<double> bloch_bands(const Lattice& lat, const KPoint& k) {
  if (lat.basis < 2)
    throw std::invalid_argument("bloch_bands: lattice has a single-site cell");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(lat.bloch_matrix(k));
  std::vector<double> bands(es.eigenvalues().data(),
                            es.eigenvalues().data() + lat.basis);
  return bands;
}

double fourier_check(const Lattice& lat) {
  Matrix t1 = -lat.hopping_matrix();
  Eigen::SelfAdjointEigenSolver<Matrix> es(t1);
  std::vector<double> dense(es.eigenvalues().data(),
                            es.eigenvalues().data() + lat.site_count());

  std::vector<double> analytic;
  analytic.reserve(lat.site_count());
  for (const KPoint& k : lat.bz_grid()) {
    if (lat.basis == 1) {
      analytic.push_back(dispersion(lat.kind, k, lat.t));
    } else {
      for (double e : bloch_bands(lat, k)) analytic.push_back(e);
    }
  }
  std::sort(analytic.begin(), analytic.end());
  std::sort(dense.begin(), dense.end());

  double res = 0.0;
  for (size_t i = 0; i < dense.size(); ++i)
    res = std::max(res, std::abs(dense[i] - analytic[i]));
  return res;
}

}  // namespace hubb
