#include <benchmark/benchmark.h>

#include "carriergame/analysis.hpp"
#include "carriergame/harness.hpp"
#include "carriergame/rng.hpp"

namespace {

using namespace carriergame;

void BM_GammaStar(benchmark::State& state) {
  const EfficiencyFunction f(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma_star(f).value);
  }
}
BENCHMARK(BM_GammaStar)->Arg(2)->Arg(10)->Arg(80);

void BM_BestResponse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  const ChannelRealization ch = sample_channel(n, n, 1.0, rng);
  const GameConfig cfg;
  PowerProfile prof = PowerProfile::zeros(n, n);
  for (auto& row : prof.p) {
    for (double& v : row) v = rng.uniform01() * cfg.p_max;
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(best_response(ch, prof, cfg, 0).carrier);
  }
}
BENCHMARK(BM_BestResponse)->Arg(2)->Arg(3)->Arg(8);

void BM_GameRun(benchmark::State& state) {
  BatchSpec spec;
  const GameConfig cfg = make_config(spec);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(play_game(spec, cfg, seed++).trajectory.iterations);
  }
}
BENCHMARK(BM_GameRun);

void BM_Batch(benchmark::State& state) {
  BatchSpec spec;
  spec.n_games = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_batch(spec).games_converged);
  }
  state.SetItemsProcessed(state.iterations() * spec.n_games);
}
BENCHMARK(BM_Batch)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_CheckLgdp(benchmark::State& state) {
  Rng rng(7);
  const ChannelRealization ch = sample_channel(2, 2, 1.0, rng);
  const GameConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        check_lgdp(ch, cfg, 10, 10, 1e-3, 11).pairs_tested);
  }
}
BENCHMARK(BM_CheckLgdp);

}  // namespace

BENCHMARK_MAIN();
