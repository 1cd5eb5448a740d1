#include <benchmark/benchmark.h>

#include "hardylab/fields.hpp"
#include "hardylab/norms.hpp"
#include "hardylab/operators.hpp"
#include "hardylab/sharpness.hpp"

namespace {

using namespace hardylab;

void BM_MixedNormFeps(benchmark::State& state) {
  const Dimension n{2};
  const double eps = 1.0 / state.range(0);
  const RadialProfile f = make_f_eps(eps, 2.0, n);
  const MixedExponents ex(2.0, 2.0, n);
  for (auto _ : state)
    benchmark::DoNotOptimize(mixed_norm_radial(f, ex, {}));
}
BENCHMARK(BM_MixedNormFeps)->Arg(10)->Arg(100)->Arg(1000);

void BM_HardyRatio(benchmark::State& state) {
  const Dimension n{2};
  const double eps = 1.0 / state.range(0);
  const MixedExponents in(2.0, 2.0, n), out(2.0, 4.0, n);
  for (auto _ : state) {
    const RadialProfile f = make_f_eps(eps, 2.0, n);
    benchmark::DoNotOptimize(
        ratio_experiment(OperatorKind::hardy, f, in, out, {}));
  }
}
BENCHMARK(BM_HardyRatio)->Arg(10)->Arg(100);

void BM_WeakNormBall(benchmark::State& state) {
  const Dimension n{2};
  const RadialProfile h = hardy_radial(make_chi_ball(1.0), n, {});
  const MixedExponents ex(2.0, 4.0, n);
  for (auto _ : state)
    benchmark::DoNotOptimize(weak_mixed_norm_monotone(h, ex, {}));
}
BENCHMARK(BM_WeakNormBall);

}  // namespace

BENCHMARK_MAIN();
