#include <benchmark/benchmark.h>

#include "alcove/center.hpp"
#include "alcove/gkm.hpp"

using namespace alcove;

namespace {

// Shift-sum kernel inside the translation trace, A2 at l=5, fully singular block.
void BM_trace_shift_sum(benchmark::State& state) {
  const WeylGroup W(RootDatum::parse("A2"));
  const BlockLabel b = make_block_label(W, Weight{-1, -1}, 5);
  const Exec exec = state.range(0) ? Exec::Parallel : Exec::Serial;
  for (auto _ : state) benchmark::DoNotOptimize(translation_trace_value(W, 5, b, 3, exec));
}

// Fixed-point pushforward over every coset representative up to the truncation.
void BM_fixed_point_pushforward(benchmark::State& state) {
  const WeylGroup W(RootDatum::parse("A2"));
  const BlockLabel b = make_block_label(W, Weight{-1, 0}, 5);
  const CartanRing R(W);
  const int trunc = 6;
  MPoly f = R.simple_root(0) * R.simple_root(0) * R.hbar() + R.simple_root(1);
  FixedPointFamily family;
  family.truncation = trunc + 1;
  for (const AffineElement& y : affine_elements_up_to(W, trunc + 1))
    family.values.emplace(y, RationalFunction::polynomial(R.act(y, f)));
  const Exec exec = state.range(0) ? Exec::Parallel : Exec::Serial;
  for (auto _ : state) benchmark::DoNotOptimize(pi_star_fixed(W, b, family, trunc, exec));
}

}  // namespace

BENCHMARK(BM_trace_shift_sum)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_fixed_point_pushforward)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
