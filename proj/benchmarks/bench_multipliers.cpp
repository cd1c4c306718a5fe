#include <benchmark/benchmark.h>

#include "ballave/multipliers.hpp"

using namespace ballave;

namespace {

void BM_BallHatRule(benchmark::State& state) {
    const auto& rule = default_rule();
    const int dim = static_cast<int>(state.range(0));
    double s = 0.0;
    for (auto _ : state) {
        s += 0.37;
        if (s > 50.0)
            s = 0.37;
        benchmark::DoNotOptimize(ball_hat(dim, s, rule));
    }
}
BENCHMARK(BM_BallHatRule)->Arg(1)->Arg(2)->Arg(3);

void BM_AEllUncached(benchmark::State& state) {
    const auto rule = gauss_legendre(64);
    double s = 0.0;
    for (auto _ : state) {
        s += 0.29;
        if (s > 50.0)
            s = 0.29;
        benchmark::DoNotOptimize(a_ell(2, 2, s, rule));
    }
}
BENCHMARK(BM_AEllUncached);

void BM_AEllBodyCube2D(benchmark::State& state) {
    const auto rule = gauss_legendre(static_cast<int>(state.range(0)));
    const BodySpec cube{BodyKind::cube, 2};
    double s = 0.0;
    for (auto _ : state) {
        s += 0.21;
        if (s > 4.0)
            s = 0.21;
        const double x[2] = {s, 0.4 * s};
        benchmark::DoNotOptimize(a_ell_body(2, cube, x, rule));
    }
}
BENCHMARK(BM_AEllBodyCube2D)->Arg(32)->Arg(64);

} // namespace
