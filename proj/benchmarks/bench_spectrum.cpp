#include <benchmark/benchmark.h>

#include <string>

#include "arrspec/document.hpp"
#include "arrspec/spectrum.hpp"

namespace {

arrspec::Arrangement arrangement(const std::string& name) { return arrspec::to_arrangement(*arrspec::fixture(name)); }

const char* const kFixtures[] = {"example-b1", "generic3d:6", "lines:8"};

void BM_Lattice(benchmark::State& state) {
  auto arr = arrangement(kFixtures[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(arrspec::build_lattice(arr));
  state.SetLabel(kFixtures[state.range(0)]);
}

void BM_Ideal(benchmark::State& state) {
  auto g = arrspec::maximal_building(arrspec::build_lattice(arrangement(kFixtures[state.range(0)])));
  for (auto _ : state) benchmark::DoNotOptimize(arrspec::ideal_generators(g));
  state.SetLabel(kFixtures[state.range(0)]);
}

void BM_Spectrum(benchmark::State& state) {
  auto arr = arrangement(kFixtures[state.range(0)]);
  const auto jobs = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(arrspec::SpectrumEngine(arr).run(jobs));
  state.SetLabel(std::string(kFixtures[state.range(0)]) + " jobs=" + std::to_string(jobs));
}

}  // namespace

BENCHMARK(BM_Lattice)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Ideal)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Spectrum)->ArgsProduct({{0, 1, 2}, {1, 4}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
