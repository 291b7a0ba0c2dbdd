#include "brauer_terminal/resolution.hpp"

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

namespace {

using namespace bterm;

BrauerModel model_for(int which) {
  std::vector<std::string> labels{"x1", "x2", "x3", "x4"};
  SymbolMatrix m(2, 4);
  if (which == 0) return BrauerModel::affine(2, labels, m);
  m.add_symbol(0, 2, 1);
  m.add_symbol(1, 2, 1);
  return level_one_fixup(BrauerModel::affine(2, labels, m)).leaf();
}

const char* model_name(int which) { return which == 0 ? "trivial-dim4" : "fixed-up-dim4"; }

void BM_EnumerateSerial(benchmark::State& state) {
  const auto model = model_for(static_cast<int>(state.range(0)));
  const EnumerationOptions opts{.depth = static_cast<int>(state.range(1))};
  std::size_t steps = 0;
  for (auto _ : state) {
    auto en = enumerate_divisors_serial(model, opts);
    steps = en.steps;
    benchmark::DoNotOptimize(en);
  }
  state.SetLabel(model_name(static_cast<int>(state.range(0))));
  state.counters["steps"] = static_cast<double>(steps);
  state.counters["steps/s"] = benchmark::Counter(static_cast<double>(steps), benchmark::Counter::kIsIterationInvariantRate);
}

void BM_EnumerateParallel(benchmark::State& state) {
  const auto model = model_for(static_cast<int>(state.range(0)));
  const EnumerationOptions opts{.depth = static_cast<int>(state.range(1)), .threads = static_cast<int>(state.range(2))};
  std::size_t steps = 0;
  for (auto _ : state) {
    auto en = enumerate_divisors(model, opts);
    steps = en.steps;
    benchmark::DoNotOptimize(en);
  }
  state.SetLabel(model_name(static_cast<int>(state.range(0))));
  state.counters["steps"] = static_cast<double>(steps);
  state.counters["steps/s"] = benchmark::Counter(static_cast<double>(steps), benchmark::Counter::kIsIterationInvariantRate);
}

BENCHMARK(BM_EnumerateSerial)->ArgsProduct({{0, 1}, {2, 3}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EnumerateParallel)
    ->ArgsProduct({{0, 1}, {2, 3}, {1, 2, 4, 8}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
