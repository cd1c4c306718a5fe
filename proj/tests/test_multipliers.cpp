#include <doctest.h>

#include "ballave/io.hpp"
#include "ballave/multipliers.hpp"
#include "test_support.hpp"

#include <filesystem>

using namespace ballave;

namespace {
// n=1 and n=3 closed forms of the normalized ball indicator transform.
double hat_1d(double s) { return s == 0.0 ? 1.0 : std::sin(s) / s; }
double hat_3d(double s) {
    if (s == 0.0)
        return 1.0;
    if (s < 0.1) {
        // series: the direct form cancels catastrophically near 0
        const double s2 = s * s;
        return 1.0 - s2 / 10.0 + s2 * s2 / 280.0 - s2 * s2 * s2 / 15120.0;
    }
    return 3.0 * (std::sin(s) - s * std::cos(s)) / (s * s * s);
}
} // namespace

TEST_CASE("gauss-legendre rule invariants") {
    for (int n : {8, 32, 64}) {
        const auto rule = gauss_legendre(n);
        double sum = 0.0;
        for (double w : rule.weights) {
            CHECK(w > 0.0);
            sum += w;
        }
        CHECK(std::abs(sum - 1.0) < 1e-14);
        // integrates u^{2j} exactly while 2j < 2n-1
        for (int j = 0; 2 * j < 2 * n - 1 && j <= 20; ++j) {
            const double got = rule.integrate([&](double u) { return ipow(u, 2 * j); });
            CHECK(std::abs(got - 1.0 / (2 * j + 1)) < 1e-13);
        }
    }
}

TEST_CASE("gamma_n closed forms and quadrature agreement") {
    CHECK(gamma_n(1) == 1.0);
    CHECK(gamma_n(2) == doctest::Approx(4.0 / kPi).epsilon(1e-15));
    CHECK(gamma_n(3) == 1.5);
    const auto& rule = default_rule();
    for (int dim : {1, 2, 3})
        CHECK(std::abs(gamma_n_quadrature(dim, rule) - gamma_n(dim)) < 1e-13);
}

TEST_CASE("average weights sum to one") {
    for (int ell = 1; ell <= 5; ++ell) {
        const auto w = average_weights(ell);
        double sum = 0.0;
        for (double c : w)
            sum += c;
        CHECK(std::abs(sum - 1.0) < 1e-14);
    }
    CHECK(average_weights(1)[0] == doctest::Approx(1.0));
    // l=2: (4 B_t - B_2t)/3
    CHECK(average_weights(2)[0] == doctest::Approx(4.0 / 3.0));
    CHECK(average_weights(2)[1] == doctest::Approx(-1.0 / 3.0));
}

TEST_CASE("ball_hat matches the 1-D and 3-D closed forms") {
    const auto& rule = default_rule();
    CHECK(ball_hat(1, 0.0, rule) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(ball_hat(2, 0.0, rule) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(ball_hat(3, 0.0, rule) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(ball_hat(1, kPi, rule)) < 1e-14);
    CHECK(std::abs(ball_hat(3, 2.0, rule) - 3.0 * (std::sin(2.0) - 2.0 * std::cos(2.0)) / 8.0) <
          1e-14);
    for (int i = 1; i <= 500; ++i) {
        const double s = 0.1 * i;
        CHECK(std::abs(ball_hat(1, s, rule) - hat_1d(s)) < 1e-12);
        CHECK(std::abs(ball_hat(3, s, rule) - hat_3d(s)) < 1e-12);
        CHECK(std::abs(ball_hat(2, s, rule)) <= 1.0 + 1e-12);
    }
}

TEST_CASE("a_ell values and bounds") {
    const auto& rule = default_rule();
    for (int ell : {1, 2, 3})
        for (int dim : {1, 2, 3})
            CHECK(a_ell(ell, dim, 0.0, rule) == 0.0);
    // closed form 1 - sin(s)/s at l=1, n=1
    CHECK(a_ell(1, 1, kPi, rule) == doctest::Approx(1.0).epsilon(1e-13));
    for (int i = 1; i <= 300; ++i) {
        const double s = 0.15 * i;
        CHECK(std::abs(a_ell(1, 1, s, rule) - (1.0 - hat_1d(s))) < 1e-12);
        for (int ell : {1, 2, 3})
            for (int dim : {1, 2, 3}) {
                const double v = a_ell(ell, dim, s, rule);
                CHECK(v >= 0.0);
                CHECK(v <= gamma_n(dim) * ipow(4.0, ell) / binomial(2 * ell, ell) + 1e-12);
            }
    }
}

TEST_CASE("identity m_l = 1 - A_l across orders and dimensions") {
    const auto& rule = default_rule();
    double worst = 0.0;
    for (int ell : {1, 2, 3})
        for (int dim : {1, 2, 3})
            for (int i = 0; i <= 2000; ++i) {
                const double s = 50.0 * i / 2000.0;
                worst = std::max(worst,
                                 std::abs(m_ell(ell, dim, s, rule) - (1.0 - a_ell(ell, dim, s, rule))));
            }
    CHECK(worst <= 1e-10);
}

TEST_CASE("m_l boundary cases") {
    const auto& rule = default_rule();
    for (int ell : {1, 2, 3, 4})
        for (int dim : {1, 2, 3})
            CHECK(m_ell(ell, dim, 0.0, rule) == doctest::Approx(1.0).epsilon(1e-13));
    // B_{1,t} = B_t: m_1 is the plain ball transform
    for (int i = 0; i <= 100; ++i) {
        const double s = 0.4 * i;
        CHECK(std::abs(m_ell(1, 1, s, rule) - ball_hat(1, s, rule)) < 1e-14);
        CHECK(std::abs(m_ell(1, 3, s, rule) - ball_hat(3, s, rule)) < 1e-14);
    }
    // two computation paths at l=2
    CHECK(m_ell(2, 1, 1.0, rule) == doctest::Approx(1.0 - a_ell(2, 1, 1.0, rule)).epsilon(1e-12));
}

TEST_CASE("trig identity residual") {
    for (int i = 0; i <= 1000; ++i) {
        const double s = 8.0 * kPi * i / 1000.0;
        CHECK(trig_identity_residual(1, s) < 1e-13);
    }
    CHECK(trig_identity_residual(3, 0.7) <= 1e-12);
    double worst = 0.0;
    for (int ell = 1; ell <= 5; ++ell)
        for (int i = 0; i <= 10000; ++i)
            worst = std::max(worst, trig_identity_residual(ell, 8.0 * kPi * i / 10000.0));
    CHECK(worst <= 1e-10);
}

TEST_CASE("ratio bounds and the analytic limit") {
    const auto& rule = default_rule();
    CHECK(a_ell_small_s_limit(1, 1, rule) == doctest::Approx(1.0 / 6.0).epsilon(1e-13));
    CHECK(a_ell_small_s_limit(2, 1, rule) == doctest::Approx(1.0 / 30.0).epsilon(1e-12));

    const auto est = certify_ratio_bounds(1, 1, 0.0, 4.0, 4000, rule);
    CHECK(est.c1_hat > 0.0);
    CHECK(est.c2_hat == doctest::Approx(1.0 / 6.0).epsilon(1e-10));
    CHECK(est.argmax == 0.0); // attained at the s->0 limit
    CHECK(est.c1_hat <= est.c2_hat);

    const auto est22 = certify_ratio_bounds(2, 2, 0.0, 4.0, 4000, rule);
    CHECK(est22.c1_hat > 0.0);
    CHECK(std::isfinite(est22.c2_hat));

    // continuity across s=0: evaluation at 1e-3 sits on the analytic limit
    for (int ell : {1, 2})
        for (int dim : {1, 2, 3}) {
            const double limit = a_ell_small_s_limit(ell, dim, rule);
            const double near = a_ell(ell, dim, 1e-3, rule) / ipow(1e-3, 2 * ell);
            CHECK(std::abs(near - limit) <= 1e-8);
        }
}

TEST_CASE("doubling the rule changes nothing at working radii") {
    const auto r64 = gauss_legendre(64);
    const auto r128 = gauss_legendre(128);
    double worst = 0.0;
    for (int i = 1; i <= 500; ++i) {
        const double s = 0.1 * i;
        worst = std::max(worst, std::abs(ball_hat(2, s, r64) - ball_hat(2, s, r128)));
        worst = std::max(worst, std::abs(a_ell(2, 2, s, r64) - a_ell(2, 2, s, r128)));
        worst = std::max(worst, std::abs(a_ell(3, 1, s, r64) - a_ell(3, 1, s, r128)));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("adaptive path agrees with the explicit rule and survives huge radii") {
    const auto& rule = default_rule();
    for (int i = 1; i <= 100; ++i) {
        const double s = 0.5 * i;
        for (int dim : {1, 2, 3}) {
            CHECK(std::abs(ball_hat_auto(dim, s) - ball_hat(dim, s, rule)) < 1e-12);
            CHECK(std::abs(a_ell_auto(2, dim, s) - a_ell(2, dim, s, rule)) < 1e-12);
        }
    }
    // composite panels vs a dense explicit rule at a large radius
    const auto big = gauss_legendre(2200);
    CHECK(std::abs(a_ell_auto(1, 1, 2048.0) - a_ell(1, 1, 2048.0, big)) < 1e-11);
    CHECK(std::abs(a_ell_auto(1, 1, 2048.0) - (1.0 - hat_1d(2048.0))) < 1e-11);
    CHECK(std::abs(ball_hat_auto(3, 700.0) - hat_3d(700.0)) < 1e-11);
}

TEST_CASE("oscillation guard refuses underpowered rules") {
    const auto& rule = default_rule();
    CHECK_THROWS_AS(ball_hat(1, 80.0, rule), std::domain_error);
    CHECK_THROWS_AS(a_ell(1, 2, 120.0, rule), std::domain_error);
    CHECK_NOTHROW(ball_hat(1, 60.0, rule)); // 64 nodes >= s is allowed
    CHECK_NOTHROW(ball_hat(1, 80.0, gauss_legendre(96)));
}

TEST_CASE("cube body multipliers") {
    const auto& rule = default_rule();
    const BodySpec interval{BodyKind::cube, 1};
    const BodySpec square{BodyKind::cube, 2};

    // 1-D cube is the 1-D ball
    for (int i = 0; i <= 80; ++i) {
        const double s = 0.05 * i;
        const double x[1] = {s};
        CHECK(std::abs(a_ell_body(1, interval, x, rule) - a_ell(1, 1, s, rule)) < 1e-12);
        CHECK(std::abs(a_ell_body(2, interval, x, rule) - a_ell(2, 1, s, rule)) < 1e-12);
    }
    // axis-aligned 2-D separates: A = 1 - sin(s)/s
    for (int i = 1; i <= 80; ++i) {
        const double s = 0.05 * i;
        const double x[2] = {s, 0.0};
        CHECK(std::abs(a_ell_body(1, square, x, rule) - (1.0 - hat_1d(s))) < 1e-12);
    }
    {
        const double zero[2] = {0.0, 0.0};
        CHECK(a_ell_body(1, square, zero, rule) == doctest::Approx(0.0).epsilon(1e-15));
    }
    // the two routes 1 - m_{l,K} and the tensor quadrature agree
    for (double sx : {0.3, 1.1, 2.7})
        for (double sy : {0.0, 0.9, 1.9}) {
            const double x[2] = {sx, sy};
            CHECK(std::abs(1.0 - m_ell_body(2, square, x) - a_ell_body(2, square, x, rule)) <
                  1e-12);
        }
    // cube indicator transform separates into a sinc product
    const double x[2] = {1.3, 0.4};
    CHECK(body_hat(square, x) ==
          doctest::Approx((std::sin(1.3) / 1.3) * (std::sin(0.4) / 0.4)).epsilon(1e-14));
    CHECK(square.outer_radius() == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("body sweep report") {
    const auto& rule = gauss_legendre(48);
    std::vector<double> radii;
    for (int i = 1; i <= 40; ++i)
        radii.push_back(4.0 * i / 40.0);
    const auto rep =
        body_ratio_and_derivative_check(1, BodySpec{BodyKind::cube, 2}, radii, 8, rule);
    CHECK(rep.ratio_min > 0.0);
    CHECK(rep.ratio_max >= rep.ratio_min);
    CHECK(std::isfinite(rep.ratio_max));
    CHECK(rep.grad_constant > 0.0);
    // halving the step does not move the empirical constant
    CHECK(std::abs(rep.grad_constant - rep.grad_constant_half) <
          0.02 * rep.grad_constant + 1e-12);
}

TEST_CASE("multiplier tables: invariants, lookup, csv") {
    const auto& rule = default_rule();
    std::vector<double> radii;
    for (int i = 0; i <= 64; ++i)
        radii.push_back(0.25 * i);
    const auto table = build_multiplier_table(TableKind::a_ell, 2, 1, radii, rule);
    CHECK(table.entries.front().first == 0.0);
    CHECK(table.entries.front().second == 0.0);

    const auto mu = table.profile();
    CHECK(mu(1.0) == doctest::Approx(a_ell(2, 1, 1.0, rule)).epsilon(1e-15));
    CHECK_THROWS_AS(mu(0.1234), std::domain_error);

    const auto hat = build_multiplier_table(TableKind::ball_hat, 1, 3, radii, rule);
    CHECK(hat.entries.front().second == doctest::Approx(1.0).epsilon(1e-14));

    const auto path = std::filesystem::temp_directory_path() / "ballave_table_test.csv";
    write_table_csv(path.string(), table);
    CHECK(std::filesystem::file_size(path) > 0);
    std::filesystem::remove(path);

    CHECK_THROWS_AS(build_multiplier_table(TableKind::eta, 1, 1, radii, rule),
                    std::invalid_argument);
}
