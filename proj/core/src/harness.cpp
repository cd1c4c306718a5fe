#include "ballave/harness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ballave {

namespace {

// splitmix64: tiny, platform-independent, enough for phases
struct SplitMix {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

bool canonical_frequency(const std::array<int, 3>& m, int dim) {
    for (int a = 0; a < dim; ++a) {
        if (m[a] > 0)
            return true;
        if (m[a] < 0)
            return false;
    }
    return false; // zero frequency
}

std::size_t flat_of_frequency(const GridSpec& g, const std::array<int, 3>& m) {
    const int n = g.samples_per_axis;
    std::size_t flat = 0;
    for (int a = 0; a < g.dim; ++a) {
        const int idx = m[a] >= 0 ? m[a] : m[a] + n;
        flat = flat * static_cast<std::size_t>(n) + static_cast<std::size_t>(idx);
    }
    return flat;
}

} // namespace

std::string family_name(Family family) {
    switch (family) {
    case Family::weierstrass:
        return "weierstrass";
    case Family::band_bump:
        return "band_bump";
    case Family::power_spectrum:
        return "power_spectrum";
    default:
        return "smooth_reference";
    }
}

SampledField generate(const TestFunctionSpec& spec) {
    const GridSpec& g = spec.grid;
    const int nyq = g.nyquist();
    SpectralField F(g);

    switch (spec.family) {
    case Family::smooth_reference: {
        F.coefficients[flat_of_frequency(g, {1, 0, 0})] = 0.5;
        F.coefficients[flat_of_frequency(g, {-1, 0, 0})] = 0.5;
        break;
    }
    case Family::weierstrass: {
        if (spec.alpha <= 0.0)
            throw std::invalid_argument("weierstrass needs alpha > 0");
        if ((1 << spec.top_level) >= nyq)
            throw std::invalid_argument("weierstrass top level reaches Nyquist");
        for (int j = 0; j <= spec.top_level; ++j) {
            const double amp = 0.5 * std::pow(2.0, -spec.alpha * j);
            const int m = 1 << j;
            F.coefficients[flat_of_frequency(g, {m, 0, 0})] += amp;
            F.coefficients[flat_of_frequency(g, {-m, 0, 0})] += amp;
        }
        break;
    }
    case Family::band_bump: {
        if ((1 << (spec.band_center + 1)) >= nyq)
            throw std::invalid_argument("band bump annulus reaches Nyquist");
        const double scale = std::ldexp(1.0, -spec.band_center);
        for (std::size_t i = 0; i < F.size(); ++i) {
            const double r = std::sqrt(static_cast<double>(frequency_sq(g, i)));
            F.coefficients[i] = FilterBank::phi(scale * r);
        }
        break;
    }
    case Family::power_spectrum: {
        if (spec.alpha <= 0.0)
            throw std::invalid_argument("power_spectrum needs alpha > 0");
        const std::int64_t cutoff = 1LL << spec.top_level;
        if (cutoff >= nyq)
            throw std::invalid_argument("power_spectrum band limit reaches Nyquist");
        SplitMix rng{spec.seed * 0x9e3779b97f4a7c15ULL + 0x243f6a8885a308d3ULL};
        const double decay = spec.alpha + 0.5 * g.dim;
        for (std::size_t i = 0; i < F.size(); ++i) {
            const auto m = frequency_vector(g, i);
            const std::int64_t m2 = frequency_sq(g, i);
            if (m2 == 0 || m2 > cutoff * cutoff || !canonical_frequency(m, g.dim))
                continue;
            const double amp = std::pow(1.0 + std::sqrt(static_cast<double>(m2)), -decay);
            const double phase = kPeriod * rng.uniform();
            const Complex z{amp * std::cos(phase), amp * std::sin(phase)};
            F.coefficients[i] = z;
            F.coefficients[flat_of_frequency(g, {-m[0], -m[1], -m[2]})] = std::conj(z);
        }
        break;
    }
    }

    SampledField f = inverse_transform(F);
    if (spec.family == Family::band_bump) {
        double sup = 0.0;
        for (const auto& v : f.values)
            sup = std::max(sup, std::abs(v));
        if (sup > 0.0)
            for (auto& v : f.values)
                v /= sup;
    }
    return f;
}

SlopeFit decay_slope(const SampledField& f, int ell, double p, ScaleRange window) {
    double sup = 0.0;
    for (const auto& v : f.values)
        sup = std::max(sup, std::abs(v));
    const double floor_level = 1e-14 * std::max(sup, 1.0);

    std::vector<double> xs, ys;
    for (int k = window.k_min; k <= window.k_max; ++k) {
        const AverageSpec spec{ell, std::ldexp(1.0, -k), BodySpec{BodyKind::euclidean_ball, f.grid.dim}};
        const double a = lp_norm(ball_difference(f, spec), p);
        if (a <= floor_level)
            continue;
        xs.push_back(static_cast<double>(k));
        ys.push_back(std::log2(a));
    }
    if (xs.size() < 4)
        throw std::invalid_argument("decay_slope needs at least 4 usable scales");
    return fit_line(xs, ys);
}

ScaleRange default_slope_window(int top_level, int ell, const GridSpec& grid) {
    NormParams probe;
    probe.method = Method::ball;
    probe.ell = ell;
    probe.alpha = 0.5; // placeholder inside (0, 2l); only the range matters
    const ScaleRange admissible = default_scale_range(probe, grid);
    ScaleRange w{2, top_level - 4};
    w.k_min = std::max(w.k_min, admissible.k_min);
    w.k_max = std::min(w.k_max, admissible.k_max);
    return w;
}

RatioStudy equivalence_study(std::span<const TestFunctionSpec> family, NormParams params,
                             const FilterBank& bank) {
    RatioStudy study;
    bool first = true;
    for (const auto& spec : family) {
        study.grid_samples = spec.grid.samples_per_axis;
        const SampledField f = generate(spec);

        NormParams ball = params;
        ball.method = Method::ball;
        if (!ball.range)
            ball.range = default_scale_range(ball, spec.grid);
        NormParams classical = ball;
        classical.method = Method::classical;

        const double bn = compute_norm(f, ball, bank).aggregate;
        const double cn = compute_norm(f, classical, bank).aggregate;
        if (!std::isfinite(bn) || !std::isfinite(cn) || cn == 0.0)
            throw std::runtime_error("equivalence study hit a non-finite or zero norm");

        RatioEntry entry;
        entry.label = family_name(spec.family) + "(alpha=" + std::to_string(spec.alpha) +
                      ",k0=" + std::to_string(spec.band_center) + ")";
        entry.ball_norm = bn;
        entry.classical_norm = cn;
        entry.ratio = bn / cn;
        if (first || entry.ratio < study.min_ratio)
            study.min_ratio = entry.ratio;
        if (first || entry.ratio > study.max_ratio)
            study.max_ratio = entry.ratio;
        first = false;
        study.entries.push_back(std::move(entry));
    }
    return study;
}

std::vector<RefinementRow> refinement_study(TestFunctionSpec spec, NormParams params,
                                            std::span<const int> sample_counts) {
    std::vector<RefinementRow> rows;
    FilterBank bank;
    double prev = 0.0;
    for (int n : sample_counts) {
        if (!rows.empty() && n <= rows.back().samples)
            throw std::invalid_argument("refinement grids must be ascending");
        spec.grid = make_grid(spec.grid.dim, n);
        bank = bank_for_grid(spec.grid);
        // an unset range re-derives per grid; an explicit one is kept fixed
        const NormParams p = params;
        const SampledField f = generate(spec);
        RefinementRow row;
        row.samples = n;
        row.value = compute_norm(f, p, bank).aggregate;
        row.rel_change = rows.empty() ? 0.0 : std::abs(row.value - prev) / std::max(prev, 1e-300);
        prev = row.value;
        rows.push_back(row);
    }
    return rows;
}

std::vector<TestFunctionSpec> standard_family(double alpha, const GridSpec& grid) {
    std::vector<TestFunctionSpec> family;
    family.push_back({Family::weierstrass, alpha, 7, 0, 1, grid});
    family.push_back({Family::band_bump, alpha, 7, 4, 1, grid});
    family.push_back({Family::band_bump, alpha, 7, 6, 1, grid});
    family.push_back({Family::power_spectrum, alpha, 7, 0, 1234, grid});
    return family;
}

} // namespace ballave
