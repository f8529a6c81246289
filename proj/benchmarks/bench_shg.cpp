#include <benchmark/benchmark.h>

#include "shg/actions.hpp"
#include "shg/amenability.hpp"
#include "shg/constructors.hpp"
#include "shg/iteration.hpp"

namespace {

shg::Semihypergroup verified(shg::Semihypergroup k) {
  shg::verify(k);
  return k;
}

shg::Semihypergroup cyclic(std::size_t n) { return verified(shg::from_semigroup(shg::cyclic_group(n))); }

void BM_Convolve(benchmark::State& state) {
  const auto k = cyclic(static_cast<std::size_t>(state.range(0)));
  const auto mu = shg::Measure::uniform(k.size());
  const auto nu = shg::Measure::point_mass(k.size(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(shg::convolve(mu, nu, k));
}
BENCHMARK(BM_Convolve)->Arg(4)->Arg(12)->Arg(24);

void BM_Associativity(benchmark::State& state) {
  const auto k = cyclic(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(shg::check_associativity(k));
}
BENCHMARK(BM_Associativity)->Arg(4)->Arg(8)->Arg(12);

void BM_FindLIM_Cyclic(benchmark::State& state) {
  const auto k = cyclic(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(shg::find_LIM(k));
}
BENCHMARK(BM_FindLIM_Cyclic)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_FindLIM_S4(benchmark::State& state) {
  const auto k = verified(shg::from_semigroup(shg::symmetric_group(4)));
  for (auto _ : state) benchmark::DoNotOptimize(shg::find_LIM(k));
}
BENCHMARK(BM_FindLIM_S4)->Unit(benchmark::kMillisecond);

void BM_NoLIM_LeftZero(benchmark::State& state) {
  const auto k = verified(shg::from_semigroup(shg::left_zero_semigroup(static_cast<std::size_t>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(shg::find_LIM(k));
}
BENCHMARK(BM_NoLIM_LeftZero)->Arg(3)->Arg(5);

void BM_DualRoute(benchmark::State& state) {
  const auto k = cyclic(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(shg::lim_via_dual_action(k));
}
BENCHMARK(BM_DualRoute)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

// S4 over the stabiliser of 4: the four-point coset space.
void BM_CosetS4(benchmark::State& state) {
  const auto g = shg::symmetric_group(4);
  shg::PointSet h;
  for (shg::Index i = 0; i < g.size(); ++i)
    if (g.labels()[i].back() == '4') h.insert(i);
  for (auto _ : state) benchmark::DoNotOptimize(shg::coset_space(g, h));
}
BENCHMARK(BM_CosetS4)->Unit(benchmark::kMillisecond);

void BM_IterateMeans(benchmark::State& state) {
  const auto act = shg::canonical_means_action(cyclic(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(shg::iterate_fixed_point(act, 1e-8, 10000));
}
BENCHMARK(BM_IterateMeans)->Arg(5)->Arg(9);

}  // namespace

BENCHMARK_MAIN();
