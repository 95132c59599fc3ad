// Microbenchmarks for the hot exact-arithmetic paths: the simplex core, the
// invariant-measure decision, block-set counting, and multiplicative stages.

#include <benchmark/benchmark.h>

#include "semigame/averaging.hpp"
#include "semigame/game.hpp"
#include "semigame/measures.hpp"
#include "semigame/payoff.hpp"
#include "semigame/pn.hpp"
#include "semigame/random_instances.hpp"
#include "semigame/semigroup.hpp"
#include "semigame/wset.hpp"

namespace {

using namespace semigame;

void bm_solve_cyclic_game(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  FiniteSemigroup s = make_cyclic_group(n);
  InstanceRng rng(42);
  PayoffFunction f = random_payoff(rng, n);
  PayoffMatrix m = build_payoff_matrix(s, f);
  for (auto _ : state) {
    GameSolution sol = solve_zero_sum(m);
    benchmark::DoNotOptimize(sol.value);
  }
}
BENCHMARK(bm_solve_cyclic_game)->Arg(4)->Arg(8)->Arg(12)->Arg(16);

void bm_invariant_measures(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  FiniteSemigroup s = make_cyclic_group(n);
  for (auto _ : state) {
    InvariantMeasurePolytope poly = invariant_measures(s);
    benchmark::DoNotOptimize(poly.status);
  }
}
BENCHMARK(bm_invariant_measures)->Arg(4)->Arg(8)->Arg(16)->Arg(24);

void bm_empty_polytope_certificate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  FiniteSemigroup s = make_left_zero(n);
  for (auto _ : state) {
    InvariantMeasurePolytope poly = invariant_measures(s);
    benchmark::DoNotOptimize(poly.farkas);
  }
}
BENCHMARK(bm_empty_polytope_certificate)->Arg(3)->Arg(5)->Arg(7);

void bm_im_bounds(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  FiniteSemigroup s = make_cyclic_group(n);
  std::vector<int> half;
  for (int i = 0; i < n / 2; ++i) half.push_back(i);
  PayoffFunction f = PayoffFunction::characteristic(Subset::from_indices(n, half));
  for (auto _ : state) {
    ImBounds b = im_bounds(s, f);
    benchmark::DoNotOptimize(b.lower);
  }
}
BENCHMARK(bm_im_bounds)->Arg(8)->Arg(16)->Arg(24);

void bm_w_count(benchmark::State& state) {
  BigInt n = 1;
  for (int i = 0; i < state.range(0); ++i) n *= 10;
  for (auto _ : state) {
    BigInt c = w_count(n);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(bm_w_count)->Arg(6)->Arg(12)->Arg(24)->Arg(48);

void bm_generate_pn(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::vector<BigInt> pn = generate_pn(n);
    benchmark::DoNotOptimize(pn.size());
  }
}
BENCHMARK(bm_generate_pn)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

void bm_density_stage(benchmark::State& state) {
  AveragingSequence seq = AveragingSequence::z_symmetric();
  IntegerSet a = make_residue(7, 3);
  BigInt n = BigInt(1) << state.range(0);
  for (auto _ : state) {
    Rational d = density_along(seq, a, n);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(bm_density_stage)->Arg(10)->Arg(20)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
