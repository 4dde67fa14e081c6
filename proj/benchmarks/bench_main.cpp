#include <benchmark/benchmark.h>

#include "enriques/moduli_catalog.hpp"

namespace {

using namespace enriques;

void BM_IsotropicWithPairing(benchmark::State& state) {
  const Class h = vector_of(parse_form("1;2,0,1,1,1,1,1,0,0,0"));
  const auto c = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(isotropic_with_pairing(h, c));
}
BENCHMARK(BM_IsotropicWithPairing)->Arg(7)->Arg(9)->Arg(12);

void BM_PhiBruteforce(benchmark::State& state) {
  const Class h = vector_of(parse_form("0;2,2,2,1,1,1,0,0,0,0"));
  for (auto _ : state) benchmark::DoNotOptimize(phi_bruteforce(h));
}
BENCHMARK(BM_PhiBruteforce);

void BM_SignatureOf(benchmark::State& state) {
  const Class h = apply_word(vector_of(parse_form("1;2,0,1,1,1,1,1,0,0,0")), random_isometry_word(7, 6));
  for (auto _ : state) benchmark::DoNotOptimize(signature_of(h));
}
BENCHMARK(BM_SignatureOf);

void BM_EnumerateForms(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_forms(state.range(0)));
}
BENCHMARK(BM_EnumerateForms)->Arg(10)->Arg(20)->Arg(30);

void BM_EnumerateTypes(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_types(state.range(0)));
}
BENCHMARK(BM_EnumerateTypes)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_FullCatalog(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_catalog(2, 30));
}
BENCHMARK(BM_FullCatalog)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
