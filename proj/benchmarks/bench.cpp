#include <benchmark/benchmark.h>

#include "pb/construct.hpp"
#include "pb/dual.hpp"
#include "pb/repair.hpp"

namespace {

void BM_Encode(benchmark::State& state) {
  auto [code, schemes] = pb::fig3_fixture();
  pb::Message msg = pb::random_message(code, 1);
  for (auto _ : state) benchmark::DoNotOptimize(pb::encode(code, msg));
}
BENCHMARK(BM_Encode);

void BM_VerifyScheme(benchmark::State& state) {
  auto [code, schemes] = pb::fig3_fixture();
  const pb::RepairScheme& scheme = schemes.at(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(pb::verify_scheme(code, scheme));
}
BENCHMARK(BM_VerifyScheme);

void BM_ExecuteRepair(benchmark::State& state) {
  auto [code, schemes] = pb::fig3_fixture();
  pb::Codeword cw = pb::encode(code, pb::random_message(code, 2));
  for (auto _ : state)
    benchmark::DoNotOptimize(pb::execute_repair(code, schemes.at(3), cw));
}
BENCHMARK(BM_ExecuteRepair);

void BM_DualBasis(benchmark::State& state) {
  auto [code, schemes] = pb::fig3_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(pb::dual_basis(code));
}
BENCHMARK(BM_DualBasis);

void BM_ExhaustiveSearch(benchmark::State& state) {
  auto [code, schemes] = pb::fig3_fixture();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        pb::exhaustive_scheme_search(code, 0, {1, 2, 3, 5}, 4));
}
BENCHMARK(BM_ExhaustiveSearch);

}  // namespace

BENCHMARK_MAIN();
