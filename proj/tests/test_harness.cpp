#include <doctest.h>

#include "ballave/harness.hpp"
#include "test_support.hpp"

using namespace ballave;
using namespace ballave::testing;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("weierstrass with one term is cos(x)") {
    const GridSpec g = make_grid(1, 64);
    const auto f = generate({Family::weierstrass, 1.0, 0, 0, 1, g});
    for (std::size_t i = 0; i < f.size(); ++i)
        CHECK(std::abs(f.values[i] - Complex{std::cos(i * g.spacing()), 0.0}) < 1e-13);
    CHECK(f.max_imag() < 1e-12);
}

TEST_CASE("smooth reference is cos(x1) in any dimension") {
    const GridSpec g = make_grid(2, 16);
    const auto f = generate({Family::smooth_reference, 1.0, 0, 0, 1, g});
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto idx = lattice_index(g, i);
        CHECK(std::abs(f.values[i] - Complex{std::cos(idx[0] * g.spacing()), 0.0}) < 1e-13);
    }
}

TEST_CASE("band bump spectrum lives exactly on the annulus") {
    const GridSpec g = make_grid(1, 256);
    const auto f = generate({Family::band_bump, 1.0, 0, 4, 1, g});
    const auto F = forward_transform(f);
    for (std::size_t i = 0; i < F.size(); ++i) {
        const double r = std::sqrt(static_cast<double>(frequency_sq(g, i)));
        if (r < 8.0 || r > 32.0)
            CHECK(std::abs(F.coefficients[i]) < 1e-15);
    }
    CHECK(lp_norm(f, kInf) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(f.max_imag() < 1e-12);
}

TEST_CASE("power spectrum fields are real, seeded and band-limited") {
    const GridSpec g = make_grid(1, 256);
    const TestFunctionSpec spec{Family::power_spectrum, 1.5, 6, 0, 99, g};
    const auto a = generate(spec);
    const auto b = generate(spec);
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(a.values[i] == b.values[i]); // bitwise

    auto other = spec;
    other.seed = 100;
    const auto c = generate(other);
    CHECK(max_abs_diff(a, c) > 1e-6);
    CHECK(a.max_imag() < 1e-12);

    const auto F = forward_transform(a);
    for (std::size_t i = 0; i < F.size(); ++i)
        if (frequency_sq(g, i) > 64 * 64)
            CHECK(std::abs(F.coefficients[i]) < 1e-15);

    // amplitude decay law on a few modes
    for (int m : {1, 5, 20}) {
        const double want = std::pow(1.0 + m, -(1.5 + 0.5));
        CHECK(std::abs(F.coefficients[static_cast<std::size_t>(m)]) ==
              doctest::Approx(want).epsilon(1e-10));
    }
}

TEST_CASE("nyquist guards") {
    const GridSpec g = make_grid(1, 64);
    CHECK_THROWS_AS(generate({Family::weierstrass, 1.0, 5, 0, 1, g}), std::invalid_argument);
    CHECK_THROWS_AS(generate({Family::band_bump, 1.0, 0, 4, 1, g}), std::invalid_argument);
    CHECK_THROWS_AS(generate({Family::power_spectrum, 1.0, 5, 0, 1, g}), std::invalid_argument);
}

TEST_CASE("decay slope recovers alpha on a mid-size grid") {
    const GridSpec g = make_grid(1, 1024);
    const auto f = generate({Family::weierstrass, 1.0, 8, 0, 1, g});
    const auto window = default_slope_window(8, 1, g);
    CHECK(window.k_min == 2);
    CHECK(window.k_max == 4);
    // widen to the admissible range for a 5-scale fit
    const auto fit = decay_slope(f, 1, kInf, ScaleRange{2, 6});
    CHECK(std::abs(fit.slope + 1.0) <= 0.1);
    CHECK(fit.points == 5);

    CHECK_THROWS_AS(decay_slope(f, 1, kInf, ScaleRange{2, 4}), std::invalid_argument);

    SampledField zero(g);
    CHECK_THROWS_AS(decay_slope(zero, 1, 2.0, ScaleRange{0, 6}), std::invalid_argument);
}

TEST_CASE("equivalence study: empty family and the single-bump multiplier quotient") {
    const GridSpec g = make_grid(1, 512);
    const FilterBank bank = bank_for_grid(g);

    NormParams params;
    params.space = Space::besov;
    params.alpha = 1.1;
    params.p = 2.0;
    params.q = 2.0;
    params.ell = 2;

    const auto empty = equivalence_study({}, params, bank);
    CHECK(empty.entries.empty());

    std::vector<TestFunctionSpec> one{{Family::band_bump, 1.1, 7, 4, 1, g}};
    const auto study = equivalence_study(one, params, bank);
    REQUIRE(study.entries.size() == 1);
    CHECK(study.min_ratio == study.max_ratio);
    CHECK(study.min_ratio > 0.0);

    // p=q=2 Parseval: the ratio is a pure multiplier quotient over the modes
    const auto f = generate(one[0]);
    const auto F = forward_transform(f);
    NormParams resolved = params;
    resolved.method = Method::ball;
    const ScaleRange range = default_scale_range(resolved, g);
    double ball2 = 0.0, classical2 = 0.0;
    for (std::size_t i = 0; i < F.size(); ++i) {
        const double r = std::sqrt(static_cast<double>(frequency_sq(g, i)));
        const double e = std::norm(F.coefficients[i]);
        if (e == 0.0 || r == 0.0)
            continue;
        for (int k = range.k_min; k <= range.k_max; ++k) {
            const double w = std::pow(2.0, 2.0 * k * params.alpha);
            ball2 += w * ipow(a_ell_auto(2, 1, std::ldexp(r, -k)), 2) * e;
            classical2 += w * ipow(FilterBank::phi(std::ldexp(r, -k)), 2) * e;
        }
    }
    const double predicted = std::sqrt(ball2 / classical2);
    CHECK(study.entries[0].ratio == doctest::Approx(predicted).epsilon(0.02));
}

TEST_CASE("refinement: fixed range makes band-limited norms grid-independent") {
    NormParams params;
    params.space = Space::besov;
    params.method = Method::ball;
    params.alpha = 1.0;
    params.p = 2.0;
    params.q = 2.0;
    params.ell = 1;
    params.range = ScaleRange{0, 5};

    TestFunctionSpec smooth{Family::smooth_reference, 1.0, 0, 0, 1, make_grid(1, 256)};
    const std::vector<int> sizes{256, 512, 1024};
    const auto rows = refinement_study(smooth, params, sizes);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].rel_change == 0.0);
    CHECK(rows[1].rel_change <= 1e-6);
    CHECK(rows[2].rel_change <= 1e-6);

    TestFunctionSpec bump{Family::band_bump, 1.0, 7, 4, 1, make_grid(1, 256)};
    for (const auto& row : refinement_study(bump, params, sizes))
        CHECK(row.rel_change <= 1e-10);

    CHECK_THROWS_AS(refinement_study(bump, params, std::vector<int>{512, 256}),
                    std::invalid_argument);
}

TEST_CASE("standard family is band-limited to 2^7") {
    const GridSpec g = make_grid(1, 1024);
    const auto family = standard_family(0.7, g);
    CHECK(family.size() == 4);
    for (const auto& spec : family) {
        const auto F = forward_transform(generate(spec));
        for (std::size_t i = 0; i < F.size(); ++i)
            if (frequency_sq(g, i) > 256 * 256)
                CHECK(std::abs(F.coefficients[i]) < 1e-15);
    }
}
