#include <benchmark/benchmark.h>

#include "kernelalg/algebra.hpp"
#include "kernelalg/deriv.hpp"
#include "kernelalg/oprep.hpp"
#include "kernelalg/rng.hpp"
#include "kernelalg/units.hpp"

using namespace kernelalg;

static void BM_Convolve(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto space = DiscreteSpace::circle(n);
    Rng rng(1);
    const Kernel f(space, rng.complex_grid(n, n));
    const Kernel g(space, rng.complex_grid(n, n));
    for (auto _ : state) benchmark::DoNotOptimize(convolve(f, g));
}
BENCHMARK(BM_Convolve)->Arg(64)->Arg(128)->Arg(256);

static void BM_FindDeltaPrime(benchmark::State& state) {
    const auto space = DiscreteSpace::circle(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(find_delta_prime(*space, 0.1));
}
BENCHMARK(BM_FindDeltaPrime)->Arg(128)->Arg(256);

static void BM_UnitSequence(benchmark::State& state) {
    const auto space = DiscreteSpace::circle(static_cast<int>(state.range(0)));
    const auto deltas = default_delta_sequence(4);
    for (auto _ : state) benchmark::DoNotOptimize(norm_unit_seq(space, deltas, Side::right));
}
BENCHMARK(BM_UnitSequence)->Arg(128);

static void BM_RepApply(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto space = DiscreteSpace::circle(n);
    Rng rng(1);
    const Kernel f(space, rng.complex_grid(n, n));
    const SampledFunction g = SampledFunction::scalar(space, rng.complex_vector(n));
    for (auto _ : state) benchmark::DoNotOptimize(rep_apply(f, g));
}
BENCHMARK(BM_RepApply)->Arg(256);

static void BM_TensorLift(benchmark::State& state) {
    const auto space = DiscreteSpace::circle(static_cast<int>(state.range(0)));
    const auto deltas = default_delta_sequence(4);
    for (auto _ : state) benchmark::DoNotOptimize(gn_hat(space, deltas, 2));
}
BENCHMARK(BM_TensorLift)->Arg(64)->Arg(128);

static void BM_WeightedSVD(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto space = DiscreteSpace::circle(n);
    Rng rng(1);
    const Kernel f(space, rng.complex_grid(n, n));
    for (auto _ : state) benchmark::DoNotOptimize(weighted_singular_values(f));
}
BENCHMARK(BM_WeightedSVD)->Arg(128);

BENCHMARK_MAIN();
