#include "hubbound/fockspace.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace hubb {

namespace {

/// All `count`-bit patterns within `width` bits, ascending.
std::vector<std::uint64_t> bit_combinations(int width, int count) {
  std::vector<std::uint64_t> out;
  if (count < 0 || count > width) return out;
  if (count == 0) {
    out.push_back(0);
    return out;
  }
  std::uint64_t v = (1ull << count) - 1ull;
  const std::uint64_t limit = 1ull << width;
  while (v < limit) {
    out.push_back(v);
    // Gosper's hack
    std::uint64_t c = v & (~v + 1);
    std::uint64_t r = v + c;
    v = (((r ^ v) >> 2) / c) | r;
  }
  return out;
}

/// Fermionic sign of c^dag_a c_b acting on |s> (a != b, b occupied, a empty):
/// parity of the occupied orbitals strictly between a and b.
inline double hop_sign(std::uint64_t s, int a, int b) {
  const int lo = std::min(a, b), hi = std::max(a, b);
  const std::uint64_t mask = (hi - lo) <= 1
                                 ? 0ull
                                 : ((1ull << hi) - (1ull << (lo + 1)));
  return (std::popcount(s & mask) & 1) ? -1.0 : 1.0;
}

struct HoppingPair {
  int x, y;
  double t;
};

std::vector<HoppingPair> hopping_pairs(const Matrix& hopping) {
  std::vector<HoppingPair> pairs;
  const long n = hopping.rows();
  for (long x = 0; x < n; ++x)
    for (long y = x + 1; y < n; ++y)
      if (hopping(x, y) != 0.0)
        pairs.push_back({static_cast<int>(x), static_cast<int>(y),
                         hopping(x, y)});
  return pairs;
}

}  // namespace

int SectorBasis::total_particles() const {
  return std::accumulate(counts.begin(), counts.end(), 0);
}

std::size_t SectorBasis::index_of(std::uint64_t state) const {
  auto it = std::lower_bound(states.begin(), states.end(), state);
  if (it == states.end() || *it != state)
    throw std::out_of_range("SectorBasis::index_of: state not in sector");
  return static_cast<std::size_t>(it - states.begin());
}

SectorBasis enumerate_sector(int sites, int flavors,
                             const std::vector<int>& counts) {
  if (static_cast<int>(counts.size()) != flavors)
    throw std::invalid_argument("enumerate_sector: counts/flavors mismatch");
  if (sites * flavors > 63)
    throw std::invalid_argument("enumerate_sector: more than 63 orbitals");
  for (int c : counts)
    if (c < 0 || c > sites)
      throw std::invalid_argument("enumerate_sector: count out of range");

  SectorBasis basis;
  basis.sites = sites;
  basis.flavors = flavors;
  basis.counts = counts;

  std::vector<std::vector<std::uint64_t>> per_flavor;
  per_flavor.reserve(flavors);
  std::size_t total = 1;
  for (int f = 0; f < flavors; ++f) {
    per_flavor.push_back(bit_combinations(sites, counts[f]));
    total *= per_flavor.back().size();
  }

  basis.states.reserve(total);
  std::vector<std::size_t> idx(flavors, 0);
  while (true) {
    std::uint64_t s = 0;
    for (int f = 0; f < flavors; ++f)
      s |= per_flavor[f][idx[f]] << (f * sites);
    basis.states.push_back(s);
    int f = 0;
    for (; f < flavors; ++f) {
      if (++idx[f] < per_flavor[f].size()) break;
      idx[f] = 0;
    }
    if (f == flavors) break;
  }
  std::sort(basis.states.begin(), basis.states.end());
  return basis;
}

void ManyBodyOperator::apply(const Vector& x, Vector& y) const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i) {
    double acc = diag[i] * x[i];
    for (std::size_t p = row_ptr[i]; p < row_ptr[i + 1]; ++p)
      acc += val[p] * x[col[p]];
    y[i] = acc;
  }
}

Matrix ManyBodyOperator::dense() const {
  const std::size_t n = dim();
  Matrix m = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = diag[i];
    for (std::size_t p = row_ptr[i]; p < row_ptr[i + 1]; ++p)
      m(i, col[p]) += val[p];
  }
  return m;
}

double ManyBodyOperator::scale() const {
  double s = 1.0;
  for (double d : diag) s = std::max(s, std::abs(d));
  for (double v : val) s = std::max(s, std::abs(v));
  return s;
}

ManyBodyOperator assemble_hamiltonian(const Matrix& hopping,
                                      const ModelSpec& model,
                                      const SectorBasis& basis) {
  if (model.flavor_count() != basis.flavors)
    throw std::invalid_argument(
        "assemble_hamiltonian: model/sector flavor mismatch");
  const int sites = basis.sites;
  if (hopping.rows() != sites || hopping.cols() != sites)
    throw std::invalid_argument(
        "assemble_hamiltonian: hopping size != sector sites");

  const auto pairs = hopping_pairs(hopping);
  ManyBodyOperator op;
  op.basis = &basis;
  const std::size_t n = basis.dim();
  op.diag.resize(n);
  std::vector<std::vector<std::pair<std::uint32_t, double>>> rows(n);

  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t s = basis.states[i];
    op.diag[i] = model.interaction_energy(s, sites);
    for (const auto& pr : pairs) {
      for (int f = 0; f < basis.flavors; ++f) {
        const int ox = f * sites + pr.x;
        const int oy = f * sites + pr.y;
        const bool has_x = (s >> ox) & 1ull;
        const bool has_y = (s >> oy) & 1ull;
        if (has_x == has_y) continue;
        const int from = has_y ? oy : ox;
        const int to = has_y ? ox : oy;
        const std::uint64_t s2 =
            (s & ~(1ull << from)) | (1ull << to);
        const double v = -pr.t * hop_sign(s, to, from);
        rows[i].emplace_back(
            static_cast<std::uint32_t>(basis.index_of(s2)), v);
      }
    }
  }

  op.row_ptr.resize(n + 1);
  op.row_ptr[0] = 0;
  for (std::size_t i = 0; i < n; ++i)
    op.row_ptr[i + 1] = op.row_ptr[i] + rows[i].size();
  op.col.reserve(op.row_ptr[n]);
  op.val.reserve(op.row_ptr[n]);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [c, v] : rows[i]) {
      op.col.push_back(c);
      op.val.push_back(v);
    }
  return op;
}

ManyBodyOperator assemble_hamiltonian(const Lattice& lat,
                                      const ModelSpec& model,
                                      const SectorBasis& basis) {
  return assemble_hamiltonian(lat.hopping_matrix(), model, basis);
}

GroundState ground_state(const ManyBodyOperator& op, std::uint64_t seed,
                         std::size_t dense_threshold) {
  const std::size_t n = op.dim();
  if (n == 0) throw std::invalid_argument("ground_state: empty sector");

  GroundState gs;
  if (n == 1) {
    gs.energy = op.diag[0];
    gs.vec = Vector::Ones(1);
    return gs;
  }

  if (n <= dense_threshold) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(op.dense());
    gs.energy = es.eigenvalues()(0);
    gs.vec = es.eigenvectors().col(0);
    return gs;
  }

  // Lanczos with full reorthogonalization
  const double scale = op.scale();
  const int max_iter = static_cast<int>(std::min<std::size_t>(n, 400));
  Matrix V(n, max_iter);
  std::vector<double> alpha, beta;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(n), w(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = gauss(rng);
  v.normalize();
  V.col(0) = v;

  double theta_prev = std::numeric_limits<double>::infinity();
  int m = 0;
  Vector ritz;
  for (int j = 0; j < max_iter; ++j) {
    op.apply(V.col(j), w);
    alpha.push_back(V.col(j).dot(w));
    w -= alpha[j] * V.col(j);
    if (j > 0) w -= beta[j - 1] * V.col(j - 1);
    // full reorthogonalization, twice
    for (int pass = 0; pass < 2; ++pass) {
      Vector proj = V.leftCols(j + 1).transpose() * w;
      w -= V.leftCols(j + 1) * proj;
    }
    const double b = w.norm();
    m = j + 1;

    const bool breakdown = b < 1e-13 * scale;
    const bool check = breakdown || j == max_iter - 1 || (j >= 10 && j % 5 == 0);
    if (check) {
      Matrix tri = Matrix::Zero(m, m);
      for (int i = 0; i < m; ++i) tri(i, i) = alpha[i];
      for (int i = 0; i + 1 < m; ++i) {
        tri(i, i + 1) = beta[i];
        tri(i + 1, i) = beta[i];
      }
      Eigen::SelfAdjointEigenSolver<Matrix> es(tri);
      const double theta = es.eigenvalues()(0);
      ritz = es.eigenvectors().col(0);
      const double resid = b * std::abs(ritz(m - 1));
      gs.energy = theta;
      gs.iterations = m;
      gs.residual = resid;
      const bool converged =
          resid < 1e-11 * scale && std::abs(theta - theta_prev) < 1e-13 * scale;
      theta_prev = theta;
      if (breakdown || converged || j == max_iter - 1) {
        if (!(breakdown || converged))
          throw std::runtime_error(
              "ground_state: Lanczos failed to converge, residual " +
              std::to_string(resid));
        gs.vec = V.leftCols(m) * ritz;
        gs.vec.normalize();
        return gs;
      }
    }

    beta.push_back(b);
    w /= b;
    V.col(j + 1) = w;
  }
  throw std::logic_error("ground_state: unreachable");
}

std::vector<std::vector<int>> flavor_splits(int sites, const ModelSpec& model,
                                            long N) {
  const int F = model.flavor_count();
  if (N < 0 || N > static_cast<long>(F) * sites)
    throw std::invalid_argument("flavor_splits: N out of range");
  const bool symmetric = model.variant != ModelSpec::Variant::MBand ||
                         model.U == model.U_prime;

  std::vector<std::vector<int>> out;
  std::vector<int> cur(F, 0);
  // enumerate compositions recursively
  auto rec = [&](auto&& self, int f, long rem) -> void {
    if (f == F - 1) {
      if (rem <= sites) {
        cur[f] = static_cast<int>(rem);
        if (!symmetric ||
            std::is_sorted(cur.begin(), cur.end(), std::greater<int>()))
          out.push_back(cur);
      }
      return;
    }
    for (int c = std::min<long>(sites, rem); c >= 0; --c) {
      cur[f] = c;
      self(self, f + 1, rem - c);
    }
  };
  rec(rec, 0, N);
  return out;
}

SectorMinimum ground_state_energy(const Matrix& hopping, const ModelSpec& model,
                                  long N, std::uint64_t seed) {
  const int sites = static_cast<int>(hopping.rows());
  if (N == 0) return {0.0, std::vector<int>(model.flavor_count(), 0)};

  SectorMinimum best;
  best.energy = std::numeric_limits<double>::infinity();
  for (const auto& split : flavor_splits(sites, model, N)) {
    SectorBasis basis = enumerate_sector(sites, model.flavor_count(), split);
    ManyBodyOperator op = assemble_hamiltonian(hopping, model, basis);
    GroundState gs = ground_state(op, seed);
    if (gs.energy < best.energy) {
      best.energy = gs.energy;
      best.counts = split;
    }
  }
  return best;
}

SectorMinimum ground_state_energy(const Lattice& lat, const ModelSpec& model,
                                  long N, std::uint64_t seed) {
  return ground_state_energy(lat.hopping_matrix(), model, N, seed);
}

}  // namespace hubb
