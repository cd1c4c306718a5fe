#include "ballave/averaging.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ballave {

void validate(const AverageSpec& spec, int grid_dim) {
    if (spec.ell < 1)
        throw std::domain_error("average order ell must be >= 1");
    if (!(spec.t > 0.0))
        throw std::domain_error("average radius t must be positive");
    BodySpec body = spec.body;
    body.dim = grid_dim;
    if (spec.ell * spec.t * body.outer_radius() >= kPi)
        throw std::domain_error("l * t * outer_radius must stay below pi on the torus");
}

SampledField ball_average_spectral(const SampledField& f, double t, const BodySpec& body) {
    AverageSpec spec{1, t, body};
    return higher_average(f, spec);
}

SampledField ball_average_spatial(const SampledField& f, double t) {
    const GridSpec& g = f.grid;
    const double h = g.spacing();
    if (t < 4.0 * h)
        throw std::domain_error("spatial ball average needs t >= 4 grid cells");
    if (t >= kPi)
        throw std::domain_error("spatial ball average needs t < pi");
    const int n = g.samples_per_axis;
    const int w = static_cast<int>(std::floor(t / h));

    // lattice offsets with |delta|*h <= t
    std::vector<std::array<int, 3>> offsets;
    const double t2 = (t / h) * (t / h);
    std::array<int, 3> d{0, 0, 0};
    const int w1 = g.dim >= 2 ? w : 0;
    const int w2 = g.dim >= 3 ? w : 0;
    for (d[0] = -w; d[0] <= w; ++d[0])
        for (d[1] = -w1; d[1] <= w1; ++d[1])
            for (d[2] = -w2; d[2] <= w2; ++d[2]) {
                double r2 = 0.0;
                for (int a = 0; a < g.dim; ++a)
                    r2 += static_cast<double>(d[a]) * d[a];
                if (r2 <= t2)
                    offsets.push_back(d);
            }

    SampledField out(g);
    const double inv = 1.0 / static_cast<double>(offsets.size());
    const std::size_t total = g.point_count();
    for (std::size_t i = 0; i < total; ++i) {
        const auto idx = lattice_index(g, i);
        Complex acc{0.0, 0.0};
        for (const auto& off : offsets) {
            std::size_t flat = 0;
            for (int a = 0; a < g.dim; ++a) {
                int j = idx[a] + off[a];
                j %= n;
                if (j < 0)
                    j += n;
                flat = flat * static_cast<std::size_t>(n) + static_cast<std::size_t>(j);
            }
            acc += f.values[flat];
        }
        out.values[i] = acc * inv;
    }
    return out;
}

SampledField higher_average(const SampledField& f, const AverageSpec& spec) {
    validate(spec, f.grid.dim);
    BodySpec body = spec.body;
    body.dim = f.grid.dim;
    const auto F = forward_transform(f);
    if (body.kind == BodyKind::euclidean_ball) {
        const auto w = average_weights(spec.ell);
        const double t = spec.t;
        const int dim = f.grid.dim;
        auto mu = [w, t, dim, ell = spec.ell](double s) {
            double acc = 0.0;
            for (int j = 1; j <= ell; ++j)
                acc += w[j - 1] * ball_hat_auto(dim, j * t * s);
            return acc;
        };
        return inverse_transform(apply_radial_multiplier(F, mu));
    }
    auto symbol = [body, t = spec.t, ell = spec.ell](const std::array<int, 3>& m) {
        std::array<double, 3> x{t * m[0], t * m[1], t * m[2]};
        return m_ell_body(ell, body, std::span<const double>(x.data(), body.dim));
    };
    return inverse_transform(apply_symbol(F, symbol));
}

SampledField higher_average_via_mell(const SampledField& f, const AverageSpec& spec) {
    validate(spec, f.grid.dim);
    if (spec.body.kind != BodyKind::euclidean_ball)
        throw std::invalid_argument("m_l route is defined for the Euclidean ball body");
    const int dim = f.grid.dim;
    return filter_field(
        f, [t = spec.t, dim, ell = spec.ell](double s) { return 1.0 - a_ell_auto(ell, dim, t * s); });
}

SampledField ball_difference(const SampledField& f, const AverageSpec& spec) {
    validate(spec, f.grid.dim);
    BodySpec body = spec.body;
    body.dim = f.grid.dim;
    const auto F = forward_transform(f);
    if (body.kind == BodyKind::euclidean_ball) {
        const int dim = f.grid.dim;
        auto mu = [t = spec.t, dim, ell = spec.ell](double s) {
            return a_ell_auto(ell, dim, t * s);
        };
        return inverse_transform(apply_radial_multiplier(F, mu));
    }
    auto symbol = [body, t = spec.t, ell = spec.ell](const std::array<int, 3>& m) {
        std::array<double, 3> x{t * m[0], t * m[1], t * m[2]};
        return 1.0 - m_ell_body(ell, body, std::span<const double>(x.data(), body.dim));
    };
    return inverse_transform(apply_symbol(F, symbol));
}

double central_difference(const std::function<double(double)>& h, int order, double step,
                          double at) {
    if (order < 1)
        throw std::invalid_argument("central difference order must be >= 1");
    double acc = 0.0;
    for (int j = 0; j <= order; ++j) {
        const double sign = (j % 2) ? -1.0 : 1.0;
        acc += sign * binomial(order, j) * h(at + 0.5 * order * step - j * step);
    }
    return acc;
}

double verify_central_difference_identity(const SampledField& f, const AverageSpec& spec,
                                          std::span<const std::size_t> probes) {
    validate(spec, f.grid.dim);
    const int ell = spec.ell;
    const double t = spec.t;
    const auto F = forward_transform(f);
    const int dim = f.grid.dim;

    // B_{j t} f for j = 0..l (j = 0 is f itself); the even extension reads
    // g(s) = B_{|s|} f(x).
    std::vector<SampledField> averaged;
    averaged.reserve(ell + 1);
    averaged.push_back(inverse_transform(F));
    for (int j = 1; j <= ell; ++j) {
        auto mu = [r = j * t, dim](double s) { return ball_hat_auto(dim, r * s); };
        averaged.push_back(inverse_transform(apply_radial_multiplier(F, mu)));
    }

    const SampledField lhs = ball_difference(f, spec);
    const double sign = (ell % 2) ? -1.0 : 1.0;
    const double scale = sign / binomial(2 * ell, ell);

    double worst = 0.0;
    for (std::size_t p : probes) {
        if (p >= f.size())
            throw std::out_of_range("probe index outside the grid");
        auto g = [&](double s) {
            const int j = static_cast<int>(std::llround(std::abs(s) / t));
            if (std::abs(std::abs(s) - j * t) > 1e-9 * t || j > ell)
                throw std::logic_error("even extension sampled off the radius lattice");
            return averaged[static_cast<std::size_t>(j)].values[p].real();
        };
        const double rhs = scale * central_difference(g, 2 * ell, t, 0.0);
        worst = std::max(worst, std::abs(lhs.values[p].real() - rhs));
    }
    return worst;
}

namespace {

// Mean of the payload over center + t*K by quadrature exact for polynomials
// up to roughly twice the per-axis order.
double body_mean(const std::function<double(std::span<const double>)>& payload,
                 std::span<const double> center, double t, const BodySpec& body, int order) {
    const QuadratureRule rule = gauss_legendre(order);
    const int dim = body.dim;
    std::array<double, 3> y{0.0, 0.0, 0.0};

    if (body.kind == BodyKind::cube) {
        double acc = 0.0;
        const int q = rule.node_count();
        std::size_t total = 1;
        for (int a = 0; a < dim; ++a)
            total *= static_cast<std::size_t>(q);
        for (std::size_t flat = 0; flat < total; ++flat) {
            std::size_t rest = flat;
            double w = 1.0;
            for (int a = 0; a < dim; ++a) {
                const int i = static_cast<int>(rest % q);
                rest /= q;
                w *= rule.weights[i];
                y[a] = center[a] + t * (2.0 * rule.nodes[i] - 1.0);
            }
            acc += w * payload(std::span<const double>(y.data(), dim));
        }
        return acc;
    }

    switch (dim) {
    case 1: {
        double acc = 0.0;
        for (int i = 0; i < rule.node_count(); ++i) {
            y[0] = center[0] + t * (2.0 * rule.nodes[i] - 1.0);
            acc += rule.weights[i] * payload(std::span<const double>(y.data(), 1));
        }
        return acc;
    }
    case 2: {
        const int m = 2 * order + 2; // exact for trig degree < m
        double acc = 0.0;
        for (int i = 0; i < rule.node_count(); ++i) {
            const double rho = t * rule.nodes[i];
            double ring = 0.0;
            for (int j = 0; j < m; ++j) {
                const double th = kPeriod * j / m;
                y[0] = center[0] + rho * std::cos(th);
                y[1] = center[1] + rho * std::sin(th);
                ring += payload(std::span<const double>(y.data(), 2));
            }
            acc += 2.0 * rule.weights[i] * rule.nodes[i] * ring / m;
        }
        return acc;
    }
    default: {
        const int m = 2 * order + 2;
        double acc = 0.0;
        for (int i = 0; i < rule.node_count(); ++i) {
            const double rho = t * rule.nodes[i];
            double shell = 0.0;
            for (int c = 0; c < rule.node_count(); ++c) {
                const double cz = 2.0 * rule.nodes[c] - 1.0;
                const double sz = std::sqrt(std::max(0.0, 1.0 - cz * cz));
                double ring = 0.0;
                for (int j = 0; j < m; ++j) {
                    const double th = kPeriod * j / m;
                    y[0] = center[0] + rho * sz * std::cos(th);
                    y[1] = center[1] + rho * sz * std::sin(th);
                    y[2] = center[2] + rho * cz;
                    ring += payload(std::span<const double>(y.data(), 3));
                }
                shell += rule.weights[c] * ring / m;
            }
            acc += 3.0 * rule.weights[i] * rule.nodes[i] * rule.nodes[i] * shell;
        }
        return acc;
    }
    }
}

} // namespace

double pointwise_body_average(const PointProbe& probe, const AverageSpec& spec) {
    if (spec.ell < 1 || !(spec.t > 0.0))
        throw std::domain_error("invalid average spec");
    if (probe.quadrature_order < spec.ell + 4)
        throw std::invalid_argument("probe quadrature order must be >= ell + 4");
    BodySpec body = spec.body;
    body.dim = static_cast<int>(probe.center.size());
    const auto w = average_weights(spec.ell);
    double acc = 0.0;
    for (int j = 1; j <= spec.ell; ++j)
        acc += w[j - 1] *
               body_mean(probe.payload, probe.center, j * spec.t, body, probe.quadrature_order);
    return acc;
}

AnnihilationReport polynomial_reproduction_check(int degree, int ell, int dim,
                                                 std::span<const double> t_grid) {
    if (degree < 0 || dim < 1 || dim > 3 || ell < 1)
        throw std::invalid_argument("invalid annihilation check request");
    AnnihilationReport rep;
    rep.degree = degree;
    rep.ell = ell;
    rep.dim = dim;

    const std::array<double, 3> site{0.37, -0.81, 0.23};
    const int order = std::max(ell + 4, degree + 4);

    auto monomial = [](std::array<int, 3> beta) {
        return [beta](std::span<const double> y) {
            double v = 1.0;
            for (std::size_t a = 0; a < y.size(); ++a)
                v *= ipow(y[a], beta[a]);
            return v;
        };
    };
    auto residual_at = [&](std::array<int, 3> beta, double t) {
        PointProbe probe{{site.begin(), site.begin() + dim}, order, monomial(beta)};
        const double exact = monomial(beta)(std::span<const double>(site.data(), dim));
        return std::abs(exact - pointwise_body_average(probe, AverageSpec{ell, t, BodySpec{}}));
    };
    auto for_each_monomial = [&](int total_degree, auto&& fn) {
        if (dim == 1) {
            fn(std::array<int, 3>{total_degree, 0, 0});
        } else if (dim == 2) {
            for (int b0 = 0; b0 <= total_degree; ++b0)
                fn(std::array<int, 3>{b0, total_degree - b0, 0});
        } else {
            for (int b0 = 0; b0 <= total_degree; ++b0)
                for (int b1 = 0; b0 + b1 <= total_degree; ++b1)
                    fn(std::array<int, 3>{b0, b1, total_degree - b0 - b1});
        }
    };

    // reproduced range: every monomial of total degree <= min(d, 2l-1)
    for (int d = 0; d <= std::min(degree, 2 * ell - 1); ++d)
        for_each_monomial(d, [&](std::array<int, 3> beta) {
            for (double t : t_grid)
                rep.reproduced_max_residual =
                    std::max(rep.reproduced_max_residual, residual_at(beta, t));
        });

    if (degree >= 2 * ell) {
        rep.saturation_checked = true;
        std::vector<double> lx, ly;
        rep.saturation_min_residual = std::numeric_limits<double>::infinity();
        for (double t : t_grid) {
            const double r = residual_at({2 * ell, 0, 0}, t);
            rep.saturation_min_residual = std::min(rep.saturation_min_residual, r);
            lx.push_back(std::log2(t));
            ly.push_back(std::log2(r));
        }
        for_each_monomial(2 * ell, [&](std::array<int, 3> beta) {
            const double r = residual_at(beta, t_grid[t_grid.size() / 2]);
            rep.saturation_min_residual = std::min(rep.saturation_min_residual, r);
        });
        rep.saturation_slope = fit_line(lx, ly);
    }
    return rep;
}

SlopeFit taylor_decay_check(const std::function<double(std::span<const double>)>& payload,
                            int ell, int dim, std::span<const double> t_grid,
                            std::span<const std::vector<double>> probes, int quadrature_order) {
    std::vector<double> lx, ly;
    double scale = 0.0;
    std::vector<double> residuals;
    for (double t : t_grid) {
        double worst = 0.0;
        for (const auto& c : probes) {
            PointProbe probe{c, quadrature_order, payload};
            const double exact = payload(std::span<const double>(c.data(), c.size()));
            scale = std::max(scale, std::abs(exact));
            worst = std::max(worst,
                             std::abs(exact - pointwise_body_average(
                                                  probe, AverageSpec{ell, t, BodySpec{
                                                                                  BodyKind::euclidean_ball,
                                                                                  dim}})));
        }
        residuals.push_back(worst);
        lx.push_back(std::log2(t));
    }
    SlopeFit fit;
    const double floor_level = 1e-13 * std::max(scale, 1.0);
    for (double r : residuals) {
        if (r < floor_level) {
            fit.degenerate = true;
            return fit;
        }
        ly.push_back(std::log2(r));
    }
    fit = fit_line(lx, ly);
    return fit;
}

} // namespace ballave
