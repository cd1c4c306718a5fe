#include "test_support.hpp"

namespace ballave::testing {

namespace {

std::size_t flat_of_frequency(const GridSpec& g, const std::array<int, 3>& m) {
    const int n = g.samples_per_axis;
    std::size_t flat = 0;
    for (int a = 0; a < g.dim; ++a) {
        const int idx = m[a] >= 0 ? m[a] : m[a] + n;
        flat = flat * static_cast<std::size_t>(n) + static_cast<std::size_t>(idx);
    }
    return flat;
}

bool canonical(const std::array<int, 3>& m, int dim) {
    for (int a = 0; a < dim; ++a) {
        if (m[a] > 0)
            return true;
        if (m[a] < 0)
            return false;
    }
    return false;
}

} // namespace

SampledField random_band_limited(const GridSpec& g, int cutoff, double decay, std::uint64_t seed,
                                 bool zero_mean) {
    Rng rng(seed);
    SpectralField F(g);
    for (std::size_t i = 0; i < F.size(); ++i) {
        const auto m = frequency_vector(g, i);
        const auto m2 = frequency_sq(g, i);
        if (m2 > static_cast<std::int64_t>(cutoff) * cutoff || !canonical(m, g.dim))
            continue;
        const double amp = std::pow(1.0 + std::sqrt(static_cast<double>(m2)), -decay);
        const double phase = kPeriod * rng.uniform();
        const Complex z{amp * std::cos(phase), amp * std::sin(phase)};
        F.coefficients[i] = z;
        F.coefficients[flat_of_frequency(g, {-m[0], -m[1], -m[2]})] = std::conj(z);
    }
    if (!zero_mean)
        F.coefficients[0] = Complex{1.0, 0.0};
    return inverse_transform(F);
}

SampledField plane_wave(const GridSpec& g, const std::array<int, 3>& m) {
    SampledField f(g);
    const double h = g.spacing();
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto idx = lattice_index(g, i);
        double phase = 0.0;
        for (int a = 0; a < g.dim; ++a)
            phase += m[a] * idx[a] * h;
        f.values[i] = Complex{std::cos(phase), std::sin(phase)};
    }
    return f;
}

SpectralField direct_forward(const SampledField& f) {
    const GridSpec& g = f.grid;
    const double h = g.spacing();
    SpectralField F(g);
    for (std::size_t k = 0; k < F.size(); ++k) {
        const auto m = frequency_vector(g, k);
        Complex acc{0.0, 0.0};
        for (std::size_t i = 0; i < f.size(); ++i) {
            const auto idx = lattice_index(g, i);
            double phase = 0.0;
            for (int a = 0; a < g.dim; ++a)
                phase += m[a] * idx[a] * h;
            acc += f.values[i] * Complex{std::cos(phase), -std::sin(phase)};
        }
        F.coefficients[k] = acc / static_cast<double>(g.point_count());
    }
    return F;
}

SampledField direct_inverse(const SpectralField& F) {
    const GridSpec& g = F.grid;
    const double h = g.spacing();
    SampledField f(g);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto idx = lattice_index(g, i);
        Complex acc{0.0, 0.0};
        for (std::size_t k = 0; k < F.size(); ++k) {
            const auto m = frequency_vector(g, k);
            double phase = 0.0;
            for (int a = 0; a < g.dim; ++a)
                phase += m[a] * idx[a] * h;
            acc += F.coefficients[k] * Complex{std::cos(phase), std::sin(phase)};
        }
        f.values[i] = acc;
    }
    return f;
}

} // namespace ballave::testing
