#include <benchmark/benchmark.h>

#include "kei/kei.hpp"

namespace {

using namespace kei;

void BM_CheckRackDihedral(benchmark::State& state) {
  auto q = dihedral_quandle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_rack(q).is_rack);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CheckRackDihedral)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oNCubed);

void BM_CheckRackConjS5(benchmark::State& state) {
  auto q = conj_quandle(symmetric_group(5));
  for (auto _ : state) benchmark::DoNotOptimize(check_rack(q).is_rack);
}
BENCHMARK(BM_CheckRackConjS5);

void BM_HomCountDihedral(benchmark::State& state) {
  auto q = dihedral_quandle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hom_count(q, q));
}
BENCHMARK(BM_HomCountDihedral)->DenseRange(3, 15, 4);

void BM_IsomorphicRelabel(benchmark::State& state) {
  auto a = inv_quandle(symmetric_group(5)).quandle;
  auto b = semidirect_involutions(build_semidirect(5, default_action(cyclic_group(2)))).quandle;
  for (auto _ : state) {
    benchmark::DoNotOptimize(are_isomorphic(a, a));
    benchmark::DoNotOptimize(are_isomorphic(b, dihedral_quandle(5)));
  }
}
BENCHMARK(BM_IsomorphicRelabel);

void BM_CoxeterBall(benchmark::State& state) {
  const auto radius = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ball_enumerate(3, WordMode::coxeter, radius).size());
}
BENCHMARK(BM_CoxeterBall)->DenseRange(8, 14, 3);

void BM_FreeKeiBall(benchmark::State& state) {
  FreeKei free(Alphabet::standard(3));
  const auto radius = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(free.ball(radius).size());
}
BENCHMARK(BM_FreeKeiBall)->DenseRange(9, 17, 4);

void BM_FreenessProbeEV(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ev_freeness_probe(4).elements_checked);
}
BENCHMARK(BM_FreenessProbeEV);

void BM_FreenessProbeDihedral(benchmark::State& state) {
  const std::vector<Element> gens{0, 1, 3};
  auto q = dihedral_quandle(101);
  for (auto _ : state) benchmark::DoNotOptimize(freeness_probe(q, gens, 5).elements_checked);
}
BENCHMARK(BM_FreenessProbeDihedral);

void BM_VerifyLaurent(benchmark::State& state) {
  auto action = default_action(symmetric_group(3));
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_laurent(n, action).iso_verified);
}
BENCHMARK(BM_VerifyLaurent)->Arg(9)->Arg(33)->Arg(99);

void BM_DeriveEqualSwap3(benchmark::State& state) {
  auto p = enveloping_presentation(FiniteQuandle(3, {0, 2, 1, 0, 1, 2, 0, 1, 2}));
  for (auto _ : state) benchmark::DoNotOptimize(derive_equal(p, 1, 2, {.depth = 4}).certificate);
}
BENCHMARK(BM_DeriveEqualSwap3);

void BM_DeriveEqualFreeBallExhaust(benchmark::State& state) {
  FreeKei free(Alphabet::standard(2));
  auto p = fiq_ball_presentation(free, 3);
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(derive_equal(p, 0, 1, {.depth = depth}).states_explored);
}
BENCHMARK(BM_DeriveEqualFreeBallExhaust)->DenseRange(4, 6, 1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
