#include <benchmark/benchmark.h>

#include "veronese/germ.hpp"
#include "veronese/linalg.hpp"
#include "veronese/mjet.hpp"
#include "veronese/random.hpp"

namespace {

using namespace veronese;

// Dense jet with every slot filled by a small nonzero rational.
MJet dense_jet(int n, int trunc, int lo, int salt) {
  const auto table = MonomialTable::get(n, trunc);
  std::vector<Rational> c(static_cast<std::size_t>(table->size()));
  for (int i = table->degree_begin(lo); i < table->size(); ++i) {
    Rational x((i * 7 + salt) % 11 - 5, (i + salt) % 4 + 1);
    x.canonicalize();
    c[static_cast<std::size_t>(i)] = x;
  }
  return MJet(n, trunc, std::move(c));
}

void BM_MJetMul(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int t = static_cast<int>(state.range(1));
  const auto a = dense_jet(n, t, 0, 1);
  const auto b = dense_jet(n, t, 0, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.counters["slots"] = a.table().size();
}
BENCHMARK(BM_MJetMul)->Args({2, 7})->Args({3, 8})->Args({2, 9})->Args({4, 8});

void BM_MJetCompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int t = static_cast<int>(state.range(1));
  const auto f = dense_jet(n, t, 1, 3);
  std::vector<MJet> psi;
  for (int i = 0; i < n; ++i) psi.push_back(MJet::variable(n, t, i) + dense_jet(n, t, 2, 5 + i));
  for (auto _ : state) benchmark::DoNotOptimize(mjet_compose(f, psi));
}
BENCHMARK(BM_MJetCompose)->Args({2, 7})->Args({3, 8})->Args({2, 9});

void BM_MJetInverse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int t = static_cast<int>(state.range(1));
  const auto u = MJet::constant(n, t, 1) + dense_jet(n, t, 1, 4);
  for (auto _ : state) benchmark::DoNotOptimize(mjet_inverse(u));
}
BENCHMARK(BM_MJetInverse)->Args({2, 7})->Args({3, 8})->Args({2, 9});

void BM_OsculatingDimension(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int q = static_cast<int>(state.range(1));
  const auto d = disguise(veronese::veronese(n, q, default_trunc(q)), 7, 2);
  for (auto _ : state) benchmark::DoNotOptimize(osculating_dimension(d.germ, q));
}
BENCHMARK(BM_OsculatingDimension)->Args({2, 2})->Args({3, 2})->Args({2, 3});

}  // namespace
