#include <benchmark/benchmark.h>

#include "xysel/fj.hpp"
#include "xysel/io_sim.hpp"
#include "xysel/oracle.hpp"
#include "xysel/permute.hpp"
#include "xysel/rng.hpp"
#include "xysel/select.hpp"

namespace {

void BM_FjSelect(benchmark::State& state) {
  const auto inst = xysel::make_square_instance(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(xysel::fj_select(inst.x, inst.y, inst.k));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FjSelect)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity();

void BM_NaiveFjSelect(benchmark::State& state) {
  const auto inst = xysel::make_square_instance(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(xysel::naive_fj_select(inst.x, inst.y, inst.k));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NaiveFjSelect)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity();

void BM_FjSelectInstrumented(benchmark::State& state) {
  const auto inst = xysel::make_square_instance(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    xysel::IoSession session;
    xysel::SimulatedCache cache(xysel::CacheConfig{64, 4096});
    session.attach(cache);
    benchmark::DoNotOptimize(xysel::fj_select(inst.x, inst.y, inst.k, &session));
  }
}
BENCHMARK(BM_FjSelectInstrumented)->Arg(1 << 12)->Arg(1 << 14);

void BM_Pbr(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<xysel::ExtValue> data(n);
  for (std::size_t i = 0; i < n; ++i) data[i] = xysel::ExtValue::finite(static_cast<double>(i));
  for (auto _ : state) {
    auto copy = data;
    benchmark::DoNotOptimize(xysel::pbr(std::move(copy)));
  }
}
BENCHMARK(BM_Pbr)->Range(1 << 10, 1 << 20);

void BM_SelectKth(benchmark::State& state) {
  const std::size_t s = static_cast<std::size_t>(state.range(0));
  std::vector<xysel::KeyedItem> items;
  items.reserve(s);
  xysel::Rng rng(5);
  for (std::size_t i = 0; i < s; ++i)
    items.push_back(
        xysel::KeyedItem{xysel::ExtValue::finite(static_cast<double>(rng.uniform_int(-1000, 1000))), i});
  const xysel::KeyedBuffer buf(nullptr, "", std::move(items));
  for (auto _ : state) {
    benchmark::DoNotOptimize(xysel::select_kth(buf, (s + 1) / 2));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SelectKth)->RangeMultiplier(8)->Range(1 << 10, 1 << 19)->Complexity();

void BM_CacheAccess(benchmark::State& state) {
  xysel::SimulatedCache cache(xysel::CacheConfig{64, 4096});
  std::uint64_t word = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cache.touch_word(0, word));
    word += 3;  // mixes hits within a block and block changes
  }
}
BENCHMARK(BM_CacheAccess);

}  // namespace

BENCHMARK_MAIN();
