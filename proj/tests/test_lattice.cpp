#include <doctest.h>

#include <cmath>
#include <set>

#include "hubbound/lattice.hpp"

using namespace hubb;

TEST_CASE("sc1d ring geometry") {
  const auto lat = build_lattice(LatticeKind::Sc1d, 2, 1.0);
  CHECK(lat.site_count() == 4);
  const Matrix h = lat.hopping_matrix();
  CHECK(h.rows() == 4);
  CHECK(h.diagonal().cwiseAbs().maxCoeff() == 0.0);
  CHECK((h - h.transpose()).cwiseAbs().maxCoeff() == 0.0);
  // every site of the 4-ring touches two neighbors with amplitude t
  for (int i = 0; i < 4; ++i) CHECK(h.row(i).sum() == doctest::Approx(2.0));
}

TEST_CASE("square coordination and counts") {
  const auto lat = build_lattice(LatticeKind::Square, 2, 1.0);
  CHECK(lat.site_count() == 16);
  const Matrix h = lat.hopping_matrix();
  for (int i = 0; i < 16; ++i) {
    int neighbors = 0;
    for (int j = 0; j < 16; ++j)
      if (h(i, j) != 0.0) ++neighbors;
    CHECK(neighbors == 4);
    CHECK(h.row(i).sum() == doctest::Approx(4.0));
  }
}

TEST_CASE("kagome site count") {
  const auto lat = build_lattice(LatticeKind::Kagome, 2, 1.0);
  CHECK(lat.site_count() == 48);
  CHECK(lat.basis == 3);
}

TEST_CASE("build_lattice rejects bad input") {
  CHECK_THROWS(build_lattice(LatticeKind::Sc1d, 0, 1.0));
  CHECK_THROWS(build_lattice(LatticeKind::Sc1d, 2, -1.0));
  CHECK_THROWS(build_lattice(LatticeKind::Sc1d, 2, 1.0, {{"bogus", 1.0}}));
}

TEST_CASE("dispersion values") {
  KPoint k0;
  k0.dim = 3;
  CHECK(dispersion(LatticeKind::Sc3d, k0, 1.0) == doctest::Approx(-6.0));

  KPoint kb;
  kb.dim = 3;
  kb.k = {M_PI / 2, 0.0, 0.0};
  CHECK(dispersion(LatticeKind::Bcc, kb, 1.0) ==
        doctest::Approx(0.0).epsilon(1e-12));

  KPoint kp;
  kp.dim = 2;
  kp.k = {M_PI, M_PI, 0.0};
  CHECK(dispersion(LatticeKind::Sc2d, kp, 1.0) == doctest::Approx(4.0));
}

TEST_CASE("dispersion is even in k") {
  for (auto kind : {LatticeKind::Sc1d, LatticeKind::Sc2d, LatticeKind::Sc3d,
                    LatticeKind::Square, LatticeKind::Bcc}) {
    const auto lat = build_lattice(kind, 2, 1.3);
    for (const auto& k : lat.bz_grid()) {
      KPoint mk = k;
      for (int i = 0; i < 3; ++i) mk.k[i] = -mk.k[i];
      CHECK(dispersion(kind, k, 1.3) ==
            doctest::Approx(dispersion(kind, mk, 1.3)).epsilon(1e-13));
    }
  }
}

TEST_CASE("kagome flat band constant over BZ") {
  const auto lat = build_lattice(LatticeKind::Kagome, 3, 1.0);
  double lo = 1e300, hi = -1e300;
  for (const auto& k : lat.bz_grid()) {
    const auto bands = bloch_bands(lat, k);
    REQUIRE(bands.size() == 3);
    lo = std::min(lo, bands[2]);  // flat band on top for t > 0
    hi = std::max(hi, bands[2]);
  }
  CHECK(hi - lo < 1e-12);
  CHECK(hi == doctest::Approx(2.0));
}

TEST_CASE("sawtooth flat lower band at default tooth tuning") {
  const auto lat = build_lattice(LatticeKind::Sawtooth, 4, 1.0);
  double lo = 1e300, hi = -1e300;
  for (const auto& k : lat.bz_grid()) {
    const auto bands = bloch_bands(lat, k);
    REQUIRE(bands.size() == 2);
    lo = std::min(lo, bands[0]);
    hi = std::max(hi, bands[0]);
  }
  CHECK(hi - lo < 1e-12);
  CHECK(hi == doctest::Approx(-2.0));
}

TEST_CASE("bloch_bands rejects single-site cells") {
  const auto lat = build_lattice(LatticeKind::Sc2d, 2, 1.0);
  CHECK_THROWS(bloch_bands(lat, lat.bz_grid().front()));
}

TEST_CASE("fourier check: real-space vs analytic spectra") {
  CHECK(fourier_check(build_lattice(LatticeKind::Sc1d, 4, 1.0)) < 1e-10);
  CHECK(fourier_check(build_lattice(LatticeKind::Square, 2, 1.0)) < 1e-10);
  CHECK(fourier_check(build_lattice(LatticeKind::Bcc, 2, 1.0)) < 1e-10);
  CHECK(fourier_check(build_lattice(LatticeKind::Sc3d, 2, 0.7)) < 1e-10);
  CHECK(fourier_check(build_lattice(LatticeKind::Kagome, 2, 1.0)) < 1e-10);
  CHECK(fourier_check(build_lattice(LatticeKind::Sawtooth, 3, 1.0)) < 1e-10);
}

TEST_CASE("cell indexing round trip") {
  const auto lat = build_lattice(LatticeKind::Kagome, 2, 1.0);
  std::set<long> seen;
  for (long c = 0; c < lat.cell_count(); ++c) {
    const auto coords = lat.cell_coords(c);
    for (int s = 0; s < lat.basis; ++s) seen.insert(lat.site_index(coords, s));
  }
  CHECK(long(seen.size()) == lat.site_count());
}
