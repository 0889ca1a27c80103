#include <benchmark/benchmark.h>

#include "hubbound/bounds.hpp"
#include "hubbound/fockspace.hpp"
#include "hubbound/hf.hpp"
#include "hubbound/spectrum.hpp"

using namespace hubb;

namespace {

Matrix ring_hopping(int sites) {
  Matrix h = Matrix::Zero(sites, sites);
  for (int i = 0; i < sites; ++i) {
    h(i, (i + 1) % sites) += 1.0;
    h((i + 1) % sites, i) += 1.0;
  }
  return h;
}

void BM_SectorMatvec(benchmark::State& state) {
  const int sites = int(state.range(0));
  const auto basis = enumerate_sector(sites, 2, {sites / 2, sites / 2});
  const auto op =
      assemble_hamiltonian(ring_hopping(sites), ModelSpec::single_band(4.0),
                           basis);
  Vector x = Vector::Ones(op.dim()).normalized();
  Vector y(op.dim());
  for (auto _ : state) {
    op.apply(x, y);
    benchmark::DoNotOptimize(y.data());
  }
}
BENCHMARK(BM_SectorMatvec)->Arg(8)->Arg(10)->Arg(12);

void BM_GroundState(benchmark::State& state) {
  const int sites = int(state.range(0));
  const auto basis = enumerate_sector(sites, 2, {sites / 2, sites / 2});
  const auto op =
      assemble_hamiltonian(ring_hopping(sites), ModelSpec::single_band(4.0),
                           basis);
  for (auto _ : state) {
    const auto gs = ground_state(op);
    benchmark::DoNotOptimize(gs.energy);
  }
}
BENCHMARK(BM_GroundState)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_ScfSolve(benchmark::State& state) {
  const int sites = int(state.range(0));
  const Matrix hop = ring_hopping(sites);
  HFOptions opts;
  opts.restarts = 2;
  for (auto _ : state) {
    const auto res = scf_solve(hop, sites, ModelSpec::single_band(4.0), opts);
    benchmark::DoNotOptimize(res.energy);
  }
}
BENCHMARK(BM_ScfSolve)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_SpectrumTable(benchmark::State& state) {
  const auto lat = build_lattice(LatticeKind::Bcc, int(state.range(0)), 1.0);
  for (auto _ : state) {
    const auto spec = spectrum_table(lat);
    benchmark::DoNotOptimize(spec.orbitals);
  }
}
BENCHMARK(BM_SpectrumTable)->Arg(8)->Arg(16)->Arg(32)
    ->Unit(benchmark::kMillisecond);

void BM_DosHistogram(benchmark::State& state) {
  const auto spec =
      spectrum_table(build_lattice(LatticeKind::Square, 64, 1.0));
  for (auto _ : state) {
    const auto dos = dos_histogram(spec, int(state.range(0)));
    benchmark::DoNotOptimize(dos.density.data());
  }
}
BENCHMARK(BM_DosHistogram)->Arg(100)->Arg(1000);

void BM_BoundReport(benchmark::State& state) {
  const auto lat = build_lattice(LatticeKind::Square, int(state.range(0)), 1.0);
  const long N = lat.site_count() / 4;
  for (auto _ : state) {
    const auto rep = assemble_report(lat, N, 2.0, BoundConstants{});
    benchmark::DoNotOptimize(rep.A_upper);
  }
}
BENCHMARK(BM_BoundReport)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
