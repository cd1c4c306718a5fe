#include <benchmark/benchmark.h>

#include "ballave/harness.hpp"

using namespace ballave;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void BM_BesovBall(benchmark::State& state) {
    const GridSpec g = make_grid(1, static_cast<int>(state.range(0)));
    const auto bank = bank_for_grid(g);
    const auto f = generate({Family::weierstrass, 1.0, 7, 0, 1, g});
    NormParams params;
    params.method = Method::ball;
    params.alpha = 1.2;
    params.ell = 2;
    for (auto _ : state)
        benchmark::DoNotOptimize(besov_norm(f, params, bank).aggregate);
}
BENCHMARK(BM_BesovBall)->Arg(1024)->Arg(4096);

void BM_TlInfinityCarleson(benchmark::State& state) {
    const GridSpec g = make_grid(1, static_cast<int>(state.range(0)));
    const auto bank = bank_for_grid(g);
    const auto f = generate({Family::power_spectrum, 1.0, 7, 0, 7, g});
    NormParams params;
    params.space = Space::triebel_lizorkin;
    params.method = Method::ball;
    params.alpha = 1.2;
    params.p = kInf;
    params.q = 2.0;
    params.ell = 2;
    for (auto _ : state)
        benchmark::DoNotOptimize(tl_norm(f, params, bank).aggregate);
}
BENCHMARK(BM_TlInfinityCarleson)->Arg(1024)->Arg(2048);

void BM_HlMaximal(benchmark::State& state) {
    const GridSpec g = make_grid(1, static_cast<int>(state.range(0)));
    const auto f = generate({Family::power_spectrum, 0.7, 7, 0, 3, g});
    for (auto _ : state)
        benchmark::DoNotOptimize(hl_maximal(f));
}
BENCHMARK(BM_HlMaximal)->Arg(1024)->Arg(4096);

} // namespace
