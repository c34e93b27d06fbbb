#include <benchmark/benchmark.h>

#include "molsym/holonomy.hpp"
#include "molsym/isotypic.hpp"
#include "molsym/species.hpp"
#include "molsym/wigner.hpp"

using namespace molsym;

static void BM_WignerD(benchmark::State& st) {
  const int l = int(st.range(0));
  const Rotation r = Rotation::from_euler(0.3, 1.1, -0.7);
  for (auto _ : st) benchmark::DoNotOptimize(wigner_D(l, r));
}
BENCHMARK(BM_WignerD)->Arg(4)->Arg(16)->Arg(64);

static void BM_MultiplicitiesIcosahedral(benchmark::State& st) {
  const auto g = build_group("I");
  for (auto _ : st) {
    int total = 0;
    for (int l = 0; l <= 40; ++l)
      for (int r = 0; r < 5; ++r) total += multiplicity(l, *g, r);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_MultiplicitiesIcosahedral);

// adapted_basis caches per (l, group); the first call is what is measured
static void BM_AdaptedBasis(benchmark::State& st) {
  const char* names[] = {"T", "O", "I"};
  const auto g = build_group(names[st.range(0)]);
  int l = 0;
  for (auto _ : st) benchmark::DoNotOptimize(adapted_basis(40 + (l++ % 200), *g));
}
BENCHMARK(BM_AdaptedBasis)->DenseRange(0, 2)->Iterations(20);

static void BM_Species13C60(benchmark::State& st) {
  const auto& p = find_preset("13C60");
  for (auto _ : st) benchmark::DoNotOptimize(molecule_species(p));
}
BENCHMARK(BM_Species13C60)->Unit(benchmark::kMillisecond);

static void BM_FlatnessTetrahedral(benchmark::State& st) {
  const auto g = build_group("T");
  for (auto _ : st)
    benchmark::DoNotOptimize(flatness_scan(*g, g->irrep_index("t"), {}, {0, 1, 2}, {0.5, 0.2, 0.1, 0.05}));
}
BENCHMARK(BM_FlatnessTetrahedral)->Unit(benchmark::kMillisecond);

static void BM_FourierRoundtrip(benchmark::State& st) {
  const auto r = resolve_irrep(parse_group("D3"), "e");
  const int lmax = int(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(fourier_roundtrip(r, lmax, lmax));
}
BENCHMARK(BM_FourierRoundtrip)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
