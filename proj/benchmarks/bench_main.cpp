#include <benchmark/benchmark.h>

#include "nsw/baselines.hpp"
#include "nsw/exact.hpp"
#include "nsw/generators.hpp"
#include "nsw/matching.hpp"
#include "nsw/reprematch.hpp"
#include "nsw/rng.hpp"
#include "nsw/smatch.hpp"

namespace {

nsw::WeightMatrix dense_matrix(int n, std::uint64_t seed) {
  nsw::Rng rng(seed);
  nsw::WeightMatrix W;
  for (int c = 0; c < n; ++c) W.items.push_back(c);
  W.w.assign(n, std::vector<double>(n));
  for (auto& row : W.w) {
    for (double& x : row) x = rng.uniform(-3.0, 3.0);
  }
  return W;
}

void BM_Matching(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  nsw::WeightMatrix W = dense_matrix(n, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nsw::max_weight_matching(W));
  }
}
BENCHMARK(BM_Matching)->Arg(8)->Arg(32)->Arg(64);

void BM_Smatch(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  nsw::Instance inst = nsw::gen_random_additive(4, m, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nsw::smatch(inst, nsw::SmatchVariant::kAdditive));
  }
}
BENCHMARK(BM_Smatch)->Arg(20)->Arg(100)->Arg(400);

void BM_Reprematch(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  nsw::Instance inst = nsw::gen_random_coverage(4, m, 11, 16, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nsw::reprematch(inst));
  }
}
BENCHMARK(BM_Reprematch)->Arg(20)->Arg(100);

void BM_ExactOracle(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  nsw::Instance inst = nsw::gen_random_additive(3, m, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nsw::exact_opt(inst));
  }
}
BENCHMARK(BM_ExactOracle)->Arg(6)->Arg(9);

void BM_NaiveBaseline(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  nsw::Instance inst = nsw::gen_random_additive(4, m, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nsw::naive_repeated_matching(inst));
  }
}
BENCHMARK(BM_NaiveBaseline)->Arg(20)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
