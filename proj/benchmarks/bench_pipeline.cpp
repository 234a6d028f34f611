#include <benchmark/benchmark.h>

#include "veronese/germ.hpp"
#include "veronese/reduction.hpp"

namespace {

using namespace veronese;

void BM_DecideDisguisedVeronese(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int q = static_cast<int>(state.range(1));
  const int t = static_cast<int>(state.range(2));
  const auto d = disguise(veronese::veronese(n, q, t), 11, 2);
  const auto raw = d.germ.raw();
  for (auto _ : state) benchmark::DoNotOptimize(decide_veronese(raw, q, 3));
}
BENCHMARK(BM_DecideDisguisedVeronese)->Args({2, 2, 7})->Args({3, 2, 8})->Args({2, 3, 9})->Unit(benchmark::kMillisecond);

void BM_ReduceToOrder1(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int q = static_cast<int>(state.range(1));
  const int t = static_cast<int>(state.range(2));
  const auto raw = disguise(veronese::veronese(n, q, t), 11, 2).germ.raw();
  for (auto _ : state) benchmark::DoNotOptimize(reduce_to_order_1(raw, q));
}
BENCHMARK(BM_ReduceToOrder1)->Args({2, 2, 7})->Args({3, 2, 8})->Args({2, 3, 9})->Unit(benchmark::kMillisecond);

}  // namespace
