#include <benchmark/benchmark.h>

#include "ballave/transform.hpp"

using namespace ballave;

namespace {

SampledField wave_field(const GridSpec& g) {
    SampledField f(g);
    const double h = g.spacing();
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto idx = lattice_index(g, i);
        f.values[i] = Complex{std::cos(3.0 * idx[0] * h), std::sin(5.0 * idx[0] * h)};
    }
    return f;
}

void BM_ForwardTransform1D(benchmark::State& state) {
    const GridSpec g = make_grid(1, static_cast<int>(state.range(0)));
    const auto f = wave_field(g);
    for (auto _ : state)
        benchmark::DoNotOptimize(forward_transform(f));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.point_count()));
}
BENCHMARK(BM_ForwardTransform1D)->Arg(256)->Arg(1024)->Arg(4096);

void BM_ForwardTransform2D(benchmark::State& state) {
    const GridSpec g = make_grid(2, static_cast<int>(state.range(0)));
    const auto f = wave_field(g);
    for (auto _ : state)
        benchmark::DoNotOptimize(forward_transform(f));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.point_count()));
}
BENCHMARK(BM_ForwardTransform2D)->Arg(64)->Arg(256);

void BM_RoundTrip1D(benchmark::State& state) {
    const GridSpec g = make_grid(1, static_cast<int>(state.range(0)));
    const auto f = wave_field(g);
    for (auto _ : state)
        benchmark::DoNotOptimize(inverse_transform(forward_transform(f)));
}
BENCHMARK(BM_RoundTrip1D)->Arg(1024)->Arg(4096);

} // namespace
