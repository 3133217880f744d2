#include "bsg/cocycle.hpp"
#include "bsg/coupling.hpp"
#include "bsg/profinite.hpp"
#include "bsg/random.hpp"
#include "bsg/tree.hpp"
#include "bsg/word.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace bsg;

namespace {

const BSParams kBS23 = BSParams::make(2, 3);

std::vector<Word> words(int letters, int max_exp, int count) {
  Rng rng(42);
  std::vector<Word> out;
  for (int i = 0; i < count; ++i) out.push_back(random_word(rng, letters, max_exp));
  return out;
}

void BM_Normalize(benchmark::State& state) {
  auto ws = words(static_cast<int>(state.range(0)), 3, 256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(normalize(ws[i++ % ws.size()], kBS23));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Normalize)->Arg(8)->Arg(32)->Arg(128);

void BM_StabilizerIndex(benchmark::State& state) {
  auto ws = words(static_cast<int>(state.range(0)), 2, 128);
  std::vector<TreeVertex> vs;
  for (const auto& w : ws) vs.push_back(canonical_vertex(w, kBS23));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& u = vs[i % vs.size()];
    const auto& v = vs[(i + 1) % vs.size()];
    benchmark::DoNotOptimize(stabilizer_index(u, v, kBS23));
    ++i;
  }
}
BENCHMARK(BM_StabilizerIndex)->Arg(4)->Arg(12);

void BM_LevelModel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bs_level_model(kBS23, state.range(0), state.range(1)));
}
BENCHMARK(BM_LevelModel)->Args({1, 0})->Args({2, 1})->Args({3, 2});

void BM_ProfiniteMul(benchmark::State& state) {
  unsigned k = static_cast<unsigned>(state.range(0));
  ProfiniteInt x(kBS23, k, k, Int(123456789)), y(kBS23, k, k, Int(987654321));
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_ProfiniteMul)->Arg(8)->Arg(32)->Arg(128);

void BM_CouplingAction(benchmark::State& state) {
  auto ws = words(static_cast<int>(state.range(0)), 1, 64);
  Real theta(Rational(3, 2));
  CouplingPoint pt{Real(Rational(1, 3)), ProfiniteInt(kBS23, 64, 64, Int(17))};
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(coupling_action(ws[i++ % ws.size()], pt, theta, kBS23));
}
BENCHMARK(BM_CouplingAction)->Arg(4)->Arg(16);

}  // namespace
BENCHMARK_MAIN();
