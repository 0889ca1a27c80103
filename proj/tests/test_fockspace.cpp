#include <doctest.h>

#include <cmath>

#include "hubbound/fockspace.hpp"
#include "hubbound/spectrum.hpp"

using namespace hubb;

namespace {

Matrix ring_hopping(int sites, double t = 1.0) {
  Matrix h = Matrix::Zero(sites, sites);
  for (int i = 0; i < sites; ++i) {
    h(i, (i + 1) % sites) += t;
    h((i + 1) % sites, i) += t;
  }
  return h;
}

Matrix dimer_hopping(double t = 1.0) {
  Matrix h(2, 2);
  h << 0, t, t, 0;
  return h;
}

}  // namespace

TEST_CASE("sector sizes") {
  CHECK(enumerate_sector(4, 2, {1, 1}).dim() == 16);
  CHECK(enumerate_sector(2, 2, {2, 2}).dim() == 1);
  CHECK(enumerate_sector(4, 2, {2, 2}).dim() == 36);
  CHECK(enumerate_sector(3, 2, {0, 0}).dim() == 1);  // vacuum
  CHECK_THROWS(enumerate_sector(40, 2, {1, 1}));     // 80 orbitals > capacity
  CHECK_THROWS(enumerate_sector(4, 2, {5, 0}));
}

TEST_CASE("states ordered and indexable") {
  const auto basis = enumerate_sector(4, 2, {2, 1});
  for (std::size_t i = 1; i < basis.dim(); ++i)
    CHECK(basis.states[i] > basis.states[i - 1]);
  for (std::size_t i = 0; i < basis.dim(); ++i)
    CHECK(basis.index_of(basis.states[i]) == i);
}

TEST_CASE("one-particle hopping block") {
  const auto basis = enumerate_sector(2, 2, {1, 0});
  const auto op = assemble_hamiltonian(dimer_hopping(), ModelSpec::single_band(3.0), basis);
  const Matrix h = op.dense();
  CHECK(h(0, 0) == 0.0);
  CHECK(h(0, 1) == doctest::Approx(-1.0));
  CHECK(h(1, 0) == doctest::Approx(-1.0));
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  CHECK(es.eigenvalues()(0) == doctest::Approx(-1.0));
  CHECK(es.eigenvalues()(1) == doctest::Approx(1.0));
}

TEST_CASE("dimer closed form") {
  for (double U : {0.0, 1.0, 4.0, 10.0}) {
    const auto mn =
        ground_state_energy(dimer_hopping(), ModelSpec::single_band(U), 2);
    const double exact = 0.5 * (U - std::sqrt(U * U + 16.0));
    CHECK(mn.energy == doctest::Approx(exact).epsilon(1e-10));
  }
}

TEST_CASE("interaction diagonal zero at U=0") {
  const auto basis = enumerate_sector(4, 2, {2, 2});
  const auto op =
      assemble_hamiltonian(ring_hopping(4), ModelSpec::single_band(0.0), basis);
  for (double d : op.diag) CHECK(d == 0.0);
}

TEST_CASE("assembled operators exactly hermitian") {
  for (const ModelSpec& model :
       {ModelSpec::single_band(2.5), ModelSpec::su_m(3, 1.2),
        ModelSpec::m_band(2, 1.0, 0.3)}) {
    std::vector<int> counts(model.flavor_count(), 0);
    counts[0] = 2;
    counts[1] = 1;
    const auto basis = enumerate_sector(3, model.flavor_count(), counts);
    const Matrix h = assemble_hamiltonian(ring_hopping(3), model, basis).dense();
    CHECK((h - h.transpose()).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("ground state of simple sectors") {
  const auto basis = enumerate_sector(4, 2, {1, 0});
  const auto op =
      assemble_hamiltonian(ring_hopping(4), ModelSpec::single_band(1.0), basis);
  const auto gs = ground_state(op);
  CHECK(gs.energy == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(gs.vec.norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("empty sector energy zero") {
  const auto mn = ground_state_energy(ring_hopping(4), ModelSpec::single_band(7.0), 0);
  CHECK(mn.energy == 0.0);
}

TEST_CASE("free-fermion sum oracle at U=0") {
  const auto lat = build_lattice(LatticeKind::Sc1d, 3, 1.0);
  const auto spec = spectrum_table(lat);
  std::vector<double> orbitals;  // each level usable twice (spin)
  for (std::size_t i = 0; i < spec.values.size(); ++i)
    for (long m = 0; m < 2 * spec.multiplicity[i]; ++m)
      orbitals.push_back(spec.values[i]);
  for (long N : {1L, 2L, 3L, 5L, 6L, 9L, 12L}) {
    double expect = 0.0;
    for (long i = 0; i < N; ++i) expect += orbitals[i];
    const auto mn = ground_state_energy(lat, ModelSpec::single_band(0.0), N);
    CHECK(mn.energy == doctest::Approx(expect).epsilon(1e-10));
  }
}

TEST_CASE("full band energy") {
  const auto lat = build_lattice(LatticeKind::Sc1d, 2, 1.0);
  const auto spec = spectrum_table(lat);
  double sum_levels = 0.0;
  for (std::size_t i = 0; i < spec.values.size(); ++i)
    sum_levels += spec.values[i] * double(spec.multiplicity[i]);
  const double U = 3.0;
  const auto mn = ground_state_energy(lat, ModelSpec::single_band(U), 8);
  CHECK(mn.energy ==
        doctest::Approx(U * 4 + 2.0 * sum_levels).epsilon(1e-10));
}

TEST_CASE("4-ring N=2 sector comparison") {
  const Matrix h = ring_hopping(4);
  const ModelSpec model = ModelSpec::single_band(1.0);
  const auto polarized = enumerate_sector(4, 2, {2, 0});
  const auto mixed = enumerate_sector(4, 2, {1, 1});
  const double ep = ground_state(assemble_hamiltonian(h, model, polarized)).energy;
  const double em = ground_state(assemble_hamiltonian(h, model, mixed)).energy;
  CHECK(ep == doctest::Approx(-2.0).epsilon(1e-10));  // interaction-blind
  CHECK(em < ep);
  CHECK(ground_state_energy(h, model, 2).energy == doctest::Approx(em));
}

TEST_CASE("E_gs nondecreasing in U") {
  const Matrix h = ring_hopping(4);
  double prev = -1e300;
  for (double U : {0.0, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    const double e = ground_state_energy(h, ModelSpec::single_band(U), 4).energy;
    CHECK(e >= prev - 1e-12);
    prev = e;
  }
}

TEST_CASE("spin-flip sector symmetry") {
  const Matrix h = ring_hopping(4);
  const ModelSpec model = ModelSpec::single_band(2.0);
  const auto a = enumerate_sector(4, 2, {2, 1});
  const auto b = enumerate_sector(4, 2, {1, 2});
  Eigen::SelfAdjointEigenSolver<Matrix> ea(assemble_hamiltonian(h, model, a).dense());
  Eigen::SelfAdjointEigenSolver<Matrix> eb(assemble_hamiltonian(h, model, b).dense());
  CHECK((ea.eigenvalues() - eb.eigenvalues()).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("Lanczos agrees with dense diagonalization") {
  const Matrix h = ring_hopping(6);
  const ModelSpec model = ModelSpec::single_band(3.0);
  const auto basis = enumerate_sector(6, 2, {3, 3});  // dim 400
  const auto op = assemble_hamiltonian(h, model, basis);
  Eigen::SelfAdjointEigenSolver<Matrix> es(op.dense());
  const auto gs = ground_state(op, 12345, /*dense_threshold=*/10);
  CHECK(gs.energy == doctest::Approx(es.eigenvalues()(0)).epsilon(1e-9));

  const Matrix h8 = ring_hopping(8);
  const auto big = enumerate_sector(8, 2, {4, 4});  // dim 4900, Lanczos path
  const auto op8 = assemble_hamiltonian(h8, model, big);
  Eigen::SelfAdjointEigenSolver<Matrix> es8(op8.dense());
  const auto gs8 = ground_state(op8);
  CHECK(gs8.energy == doctest::Approx(es8.eigenvalues()(0)).epsilon(1e-9));
}

TEST_CASE("translation invariance of E_gs") {
  const Matrix h = ring_hopping(6);
  Matrix hs = Matrix::Zero(6, 6);  // relabel sites by a one-step shift
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) hs((i + 1) % 6, (j + 1) % 6) = h(i, j);
  const ModelSpec model = ModelSpec::single_band(1.7);
  CHECK(ground_state_energy(h, model, 4).energy ==
        doctest::Approx(ground_state_energy(hs, model, 4).energy)
            .epsilon(1e-10));
}

TEST_CASE("flavor splits cover and dedup") {
  const auto splits = flavor_splits(4, ModelSpec::single_band(1.0), 3);
  CHECK(splits.size() == 2);  // (2,1) ~ (1,2)
  const auto su3 = flavor_splits(2, ModelSpec::su_m(3, 1.0), 3);
  for (const auto& s : su3) {
    long tot = 0;
    for (int c : s) tot += c;
    CHECK(tot == 3);
  }
}
