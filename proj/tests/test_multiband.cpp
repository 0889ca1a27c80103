#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "hubbound/multiband.hpp"

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

Matrix dimer_hopping() {
  Matrix h(2, 2);
  h << 0, 1, 1, 0;
  return h;
}

// brute-force diagonal: occupations per (site, flavor) from the bit string
double brute_diagonal(std::uint64_t state, int sites, const ModelSpec& m) {
  std::vector<std::vector<int>> occ(sites, std::vector<int>(m.flavor_count()));
  for (int f = 0; f < m.flavor_count(); ++f)
    for (int x = 0; x < sites; ++x)
      occ[x][f] = int((state >> (f * sites + x)) & 1u);
  double e = 0.0;
  for (int x = 0; x < sites; ++x) {
    if (m.variant == ModelSpec::Variant::SingleBand) {
      e += m.U * occ[x][0] * occ[x][1];
    } else if (m.variant == ModelSpec::Variant::SUM) {
      int k = 0;
      for (int f = 0; f < m.M; ++f) k += occ[x][f];
      e += m.U * k * (k - 1);  // ordered flavor pairs
    } else if (m.U == m.U_prime) {
      // the concise multi-index form: ordered pairs over all flavors
      for (int A = 0; A < 2 * m.M; ++A)
        for (int B = 0; B < 2 * m.M; ++B)
          if (A != B) e += m.U * occ[x][A] * occ[x][B];
    } else {
      for (int a = 0; a < m.M; ++a)
        e += m.U * occ[x][2 * a] * occ[x][2 * a + 1];
      for (int A = 0; A < 2 * m.M; ++A)
        for (int B = 0; B < 2 * m.M; ++B)
          if (A / 2 != B / 2) e += m.U_prime * occ[x][A] * occ[x][B];
    }
  }
  return e;
}

}  // namespace

TEST_CASE("interaction diagonals vs brute force") {
  const int sites = 2;
  for (const ModelSpec& m :
       {ModelSpec::single_band(1.7), ModelSpec::su_m(3, 0.9),
        ModelSpec::m_band(2, 1.1, 1.1), ModelSpec::m_band(2, 1.1, 0.4)}) {
    const int orbitals = m.flavor_count() * sites;
    for (std::uint64_t s = 0; s < (1ull << orbitals); ++s)
      CHECK(m.interaction_energy(s, sites) ==
            doctest::Approx(brute_diagonal(s, sites, m)).epsilon(1e-12));
  }
}

TEST_CASE("ordered-pair site energies") {
  // SUM: site with k particles contributes U k(k-1)
  const ModelSpec su3 = ModelSpec::su_m(3, 2.0);
  // one site, flavor bits {0, 1, 2} all occupied
  CHECK(su3.interaction_energy(0b111, 1) == doctest::Approx(2.0 * 3 * 2));
  // M-band with U = U': k occupied flavors -> U k(k-1)
  const ModelSpec mb = ModelSpec::m_band(2, 1.5, 1.5);
  CHECK(mb.interaction_energy(0b1111, 1) == doctest::Approx(1.5 * 4 * 3));
}

TEST_CASE("interaction positivity") {
  const ModelSpec m = ModelSpec::m_band(2, 1.0, 0.5);
  for (std::uint64_t s = 0; s < (1ull << 8); ++s)
    CHECK(m.interaction_energy(s, 2) >= 0.0);
}

TEST_CASE("dimer reduction identities") {
  const Matrix hop = dimer_hopping();
  const double U = 3.0;
  const double exact = 0.5 * (U - std::sqrt(U * U + 16.0));
  const auto a = sector_spectrum(hop, ModelSpec::single_band(U), {1, 1});
  const auto b = sector_spectrum(hop, ModelSpec::su_m(2, U / 2.0), {1, 1});
  const auto c =
      sector_spectrum(hop, ModelSpec::m_band(1, U, 0.2 * U + 0.3), {1, 1});
  REQUIRE(a.size() == 4);
  CHECK(a.front() == doctest::Approx(exact).epsilon(1e-10));
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-10));
    CHECK(a[i] == doctest::Approx(c[i]).epsilon(1e-10));
  }
}

TEST_CASE("reduction check on small rings") {
  for (int L : {1, 2}) {
    const auto lat = build_lattice(LatticeKind::Sc1d, L, 1.0);
    const auto rep = reduction_check(lat, 2 * lat.site_count(), 2.5);
    CHECK(rep.ok);
    CHECK(rep.max_dev_su2 < 1e-10);
    CHECK(rep.max_dev_mband < 1e-10);
  }
}

TEST_CASE("decoupled bands at U'=0") {
  const Matrix hop = ring_hopping(3);
  const double U = 2.0;
  const ModelSpec two_band = ModelSpec::m_band(2, U, 0.0);
  const ModelSpec one_band = ModelSpec::single_band(U);
  for (long N : {1L, 2L, 3L, 4L}) {
    double expect = 1e300;
    for (long N1 = 0; N1 <= N; ++N1) {
      const long N2 = N - N1;
      if (N1 > 6 || N2 > 6) continue;
      expect = std::min(expect,
                        ground_state_energy(hop, one_band, N1).energy +
                            ground_state_energy(hop, one_band, N2).energy);
    }
    CHECK(ground_state_energy(hop, two_band, N).energy ==
          doctest::Approx(expect).epsilon(1e-9));
  }
}

TEST_CASE("flavor permutation symmetry of SU(3) sectors") {
  const Matrix hop = ring_hopping(3);
  const ModelSpec m = ModelSpec::su_m(3, 1.3);
  const auto a = sector_spectrum(hop, m, {2, 1, 0});
  const auto b = sector_spectrum(hop, m, {0, 2, 1});
  const auto c = sector_spectrum(hop, m, {1, 0, 2});
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-10));
    CHECK(a[i] == doctest::Approx(c[i]).epsilon(1e-10));
  }
}

TEST_CASE("model parsing and projector form") {
  const auto sb = ModelSpec::from_name("singleband", 1, 2.0, 2.0);
  CHECK(sb.flavor_count() == 2);
  CHECK(sb.has_projector_form());
  CHECK(sb.projector_coupling() == doctest::Approx(2.0));

  const auto su = ModelSpec::from_name("sum", 3, 2.0, 0.0);
  CHECK(su.flavor_count() == 3);
  CHECK(su.has_projector_form());
  CHECK(su.projector_coupling() == doctest::Approx(4.0));

  const auto mb = ModelSpec::from_name("mband", 2, 2.0, 1.0);
  CHECK(mb.flavor_count() == 4);
  CHECK_FALSE(mb.has_projector_form());
  CHECK_THROWS(mb.projector_coupling());

  CHECK_THROWS(ModelSpec::from_name("bogus", 1, 1.0, 1.0));
}
