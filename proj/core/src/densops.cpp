#include "hubbound/densops.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace hubb {

namespace {

inline double hop_sign(std::uint64_t s, int a, int b) {
  const int lo = std::min(a, b), hi = std::max(a, b);
  const std::uint64_t mask = (hi - lo) <= 1
                                 ? 0ull
                                 : ((1ull << hi) - (1ull << (lo + 1)));
  return (std::popcount(s & mask) & 1) ? -1.0 : 1.0;
}

void check_norm(const Vector& psi) {
  if (std::abs(psi.norm() - 1.0) > 1e-8)
    throw std::invalid_argument("state is not unit-norm");
}

}  // namespace

Matrix one_pdo(const Vector& psi, const SectorBasis& basis) {
  check_norm(psi);
  const int sites = basis.sites;
  const int n_orb = sites * basis.flavors;
  Matrix g = Matrix::Zero(n_orb, n_orb);

  for (std::size_t i = 0; i < basis.dim(); ++i) {
    const double c = psi[i];
    if (c == 0.0) continue;
    const std::uint64_t s = basis.states[i];
    for (int k = 0; k < n_orb; ++k)
      if ((s >> k) & 1ull) g(k, k) += c * c;
    // off-diagonal: c^dag_k c_l within the same flavor block
    for (int f = 0; f < basis.flavors; ++f) {
      for (int lx = 0; lx < sites; ++lx) {
        const int l = f * sites + lx;
        if (!((s >> l) & 1ull)) continue;
        for (int kx = 0; kx < sites; ++kx) {
          const int k = f * sites + kx;
          if (k == l || ((s >> k) & 1ull)) continue;
          const std::uint64_t s2 = (s & ~(1ull << l)) | (1ull << k);
          const double v = hop_sign(s, k, l) * c * psi[basis.index_of(s2)];
          g(k, l) += v;
        }
      }
    }
  }
  return g;
}

Matrix free_gamma0(const Matrix& hopping, int flavors, long N) {
  const long sites = hopping.rows();
  if (N < 0 || N > flavors * sites)
    throw std::invalid_argument("free_gamma0: N out of range");
  Eigen::SelfAdjointEigenSolver<Matrix> es(Matrix(-hopping));
  const Matrix& evec = es.eigenvectors();

  // fill ascending levels, flavor-balanced: per orbital level, one particle
  // per flavor in index order
  std::vector<long> filled(flavors, 0);
  long remaining = N;
  long level = 0;
  while (remaining > 0) {
    for (int f = 0; f < flavors && remaining > 0; ++f) {
      if (filled[f] <= level) {
        filled[f] = level + 1;
        --remaining;
      }
    }
    ++level;
  }

  Matrix g = Matrix::Zero(flavors * sites, flavors * sites);
  for (int f = 0; f < flavors; ++f) {
    if (filled[f] == 0) continue;
    Matrix p = evec.leftCols(filled[f]) * evec.leftCols(filled[f]).transpose();
    g.block(f * sites, f * sites, sites, sites) = p;
  }
  return g;
}

Matrix free_gamma0(const Lattice& lat, long N) {
  return free_gamma0(lat.hopping_matrix(), 2, N);
}

std::vector<double> two_pdo_site_contractions(const Vector& psi,
                                              const SectorBasis& basis) {
  check_norm(psi);
  const int sites = basis.sites;
  std::vector<double> vals(sites, 0.0);
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    const double w = psi[i] * psi[i];
    if (w == 0.0) continue;
    const std::uint64_t s = basis.states[i];
    for (int x = 0; x < sites; ++x) {
      int k = 0;
      for (int f = 0; f < basis.flavors; ++f)
        k += (s >> (f * sites + x)) & 1ull;
      vals[x] += w * k * (k - 1);
    }
  }
  return vals;
}

double two_pdo_trace(const Vector& psi, const SectorBasis& basis) {
  check_norm(psi);
  const int n_orb = basis.sites * basis.flavors;
  double tr = 0.0;
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    const double w = psi[i] * psi[i];
    if (w == 0.0) continue;
    const int n = std::popcount(basis.states[i]);
    (void)n_orb;
    tr += w * n * (n - 1);
  }
  return tr;
}

Vector slater_state(const SectorBasis& basis,
                    const std::vector<Matrix>& orbitals) {
  if (static_cast<int>(orbitals.size()) != basis.flavors)
    throw std::invalid_argument("slater_state: orbitals per flavor expected");
  for (int f = 0; f < basis.flavors; ++f) {
    if (orbitals[f].rows() != basis.sites ||
        orbitals[f].cols() != basis.counts[f])
      throw std::invalid_argument("slater_state: orbital matrix shape");
  }

  Vector psi(basis.dim());
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    const std::uint64_t s = basis.states[i];
    double amp = 1.0;
    for (int f = 0; f < basis.flavors; ++f) {
      const int nf = basis.counts[f];
      if (nf == 0) continue;
      Matrix sub(nf, nf);
      int r = 0;
      for (int x = 0; x < basis.sites; ++x) {
        if ((s >> (f * basis.sites + x)) & 1ull) {
          sub.row(r++) = orbitals[f].row(x);
        }
      }
      amp *= sub.determinant();
    }
    psi[i] = amp;
  }
  const double nrm = psi.norm();
  if (nrm < 1e-12)
    throw std::runtime_error("slater_state: vanishing determinant state");
  return psi / nrm;
}

std::vector<double> slater_site_contractions(const Matrix& gamma, int sites) {
  const int flavors = static_cast<int>(gamma.rows()) / sites;
  std::vector<double> vals(sites, 0.0);
  for (int x = 0; x < sites; ++x) {
    double tr_xg = 0.0, tr_xgxg = 0.0;
    for (int f = 0; f < flavors; ++f) {
      tr_xg += gamma(f * sites + x, f * sites + x);
      for (int f2 = 0; f2 < flavors; ++f2) {
        const double v = gamma(f * sites + x, f2 * sites + x);
        tr_xgxg += v * v;
      }
    }
    vals[x] = tr_xg * tr_xg - tr_xgxg;
  }
  return vals;
}

LemmaReport lemma_contractions(const Matrix& gamma_gs, const Matrix& gamma0,
                               int sites) {
  if (gamma_gs.rows() != gamma0.rows())
    throw std::invalid_argument("lemma_contractions: dimension mismatch");
  const int n_orb = static_cast<int>(gamma_gs.rows());
  const int flavors = n_orb / sites;
  const long n_sites = sites;

  LemmaReport rep;
  const Matrix id = Matrix::Identity(n_orb, n_orb);
  rep.tr_1mgs_g0 = ((id - gamma_gs) * gamma0).trace();
  rep.A_measured = std::sqrt(std::max(0.0, rep.tr_1mgs_g0 / n_sites));

  const Matrix q = id - gamma0;
  const Matrix qgq = q * gamma_gs * q;
  const Matrix g0g0 = gamma0 * gamma0;  // building blocks for per-site traces

  rep.tr_x_g0.assign(sites, 0.0);
  rep.tr_x_ggs.assign(sites, 0.0);
  rep.tr_x_g0_x_g0.assign(sites, 0.0);
  rep.tr_x_q_ggs_q.assign(sites, 0.0);
  (void)g0g0;
  for (int x = 0; x < sites; ++x) {
    for (int f = 0; f < flavors; ++f) {
      const int k = f * sites + x;
      rep.tr_x_g0[x] += gamma0(k, k);
      rep.tr_x_ggs[x] += gamma_gs(k, k);
      rep.tr_x_q_ggs_q[x] += qgq(k, k);
      for (int f2 = 0; f2 < flavors; ++f2) {
        const int l = f2 * sites + x;
        rep.tr_x_g0_x_g0[x] += gamma0(k, l) * gamma0(l, k);
      }
    }
  }
  return rep;
}

}  // namespace hubb
