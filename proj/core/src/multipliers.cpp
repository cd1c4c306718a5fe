#include "ballave/multipliers.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <stdexcept>
#include <unordered_map>

#include "ballave/grid.hpp"

namespace ballave {

namespace {

void check_dim(int dim) {
    if (dim < 1 || dim > 3)
        throw std::invalid_argument("dimension must be 1, 2 or 3");
}

void check_ell(int ell) {
    if (ell < 1 || ell > 16)
        throw std::invalid_argument("average order ell must be in [1,16]");
}

// Oscillation guard on the requested radius: the 64-node default covers
// s <= 50 with error far below 1e-12; beyond that the rule must grow with s.
void density_guard(double s, const QuadratureRule& rule) {
    if (s > 50.0 && rule.node_count() < s)
        throw std::domain_error("radius " + std::to_string(s) +
                                " needs a quadrature rule with node_count >= s");
}

// int_0^1 g(u) (1-u^2)^{(n-1)/2} du through one rule application. The dim=2
// weight has a square-root endpoint singularity, so it is evaluated after the
// smoothing substitution u = sin(pi v / 2); dims 1 and 3 apply the rule in u.
template <typename G>
double weighted_integral(int dim, const QuadratureRule& rule, G&& g) {
    switch (dim) {
    case 1:
        return rule.integrate([&](double u) { return g(u); });
    case 2:
        return rule.integrate([&](double v) {
            const double th = 0.5 * kPi * v;
            const double c = std::cos(th);
            return 0.5 * kPi * c * c * g(std::sin(th));
        });
    default:
        return rule.integrate([&](double u) { return (1.0 - u * u) * g(u); });
    }
}

// Composite variant for the adaptive path: same parameterization, split into
// panels so each panel sees at most ~40 radians of phase.
template <typename G>
double weighted_integral_panels(int dim, double freq, G&& g) {
    const QuadratureRule& base = default_rule();
    const double scale = (dim == 2) ? 0.5 * kPi : 1.0;
    const int panels = 1 + static_cast<int>(freq * scale / 40.0);
    double acc = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = static_cast<double>(p) / panels;
        const double w = 1.0 / panels;
        for (int i = 0; i < base.node_count(); ++i) {
            const double v = lo + w * base.nodes[i];
            double u, wf;
            if (dim == 2) {
                const double th = 0.5 * kPi * v;
                const double c = std::cos(th);
                u = std::sin(th);
                wf = 0.5 * kPi * c * c;
            } else {
                u = v;
                wf = (dim == 3) ? 1.0 - u * u : 1.0;
            }
            acc += w * base.weights[i] * wf * g(u);
        }
    }
    return acc;
}

double weighted_cos(int dim, double s, const QuadratureRule& rule) {
    return weighted_integral(dim, rule, [&](double u) { return std::cos(u * s); });
}

// Memo caches for the adaptive evaluations, keyed by the exact radius bits.
using RadiusCache = std::unordered_map<std::uint64_t, double>;

std::uint64_t radius_key(double s) {
    std::uint64_t k;
    static_assert(sizeof(k) == sizeof(s));
    __builtin_memcpy(&k, &s, sizeof(k));
    return k;
}

RadiusCache& hat_cache(int dim) {
    thread_local RadiusCache caches[4];
    return caches[dim];
}

RadiusCache& a_cache(int ell, int dim) {
    thread_local std::map<std::pair<int, int>, RadiusCache> caches;
    return caches[{ell, dim}];
}

} // namespace

double binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return std::round(r);
}

double ipow(double x, int n) {
    double r = 1.0;
    for (double b = x; n > 0; n >>= 1, b *= b)
        if (n & 1)
            r *= b;
    return r;
}

std::vector<double> average_weights(int ell) {
    check_ell(ell);
    const double c = binomial(2 * ell, ell);
    std::vector<double> w(ell);
    for (int j = 1; j <= ell; ++j)
        w[j - 1] = -2.0 / c * ((j % 2) ? -1.0 : 1.0) * binomial(2 * ell, ell - j);
    return w;
}

double gamma_n(int dim) {
    check_dim(dim);
    switch (dim) {
    case 1:
        return 1.0;
    case 2:
        return 4.0 / kPi;
    default:
        return 1.5;
    }
}

double gamma_n_quadrature(int dim, const QuadratureRule& rule) {
    check_dim(dim);
    return 1.0 / weighted_integral(dim, rule, [](double) { return 1.0; });
}

double ball_hat(int dim, double s, const QuadratureRule& rule) {
    check_dim(dim);
    if (s < 0.0)
        throw std::domain_error("ball_hat needs s >= 0");
    density_guard(s, rule);
    return gamma_n(dim) * weighted_cos(dim, s, rule);
}

double a_ell(int ell, int dim, double s, const QuadratureRule& rule) {
    check_ell(ell);
    check_dim(dim);
    if (s == 0.0)
        return 0.0;
    density_guard(std::abs(s), rule);
    const double pref = gamma_n(dim) * ipow(4.0, ell) / binomial(2 * ell, ell);
    return pref * weighted_integral(dim, rule, [&](double u) {
               return ipow(std::sin(0.5 * u * s), 2 * ell);
           });
}

double m_ell(int ell, int dim, double s, const QuadratureRule& rule) {
    check_ell(ell);
    check_dim(dim);
    density_guard(std::abs(s), rule);
    const auto w = average_weights(ell);
    double acc = 0.0;
    for (int j = 1; j <= ell; ++j)
        acc += w[j - 1] * gamma_n(dim) * weighted_cos(dim, j * s, rule);
    return acc;
}

double a_ell_small_s_limit(int ell, int dim, const QuadratureRule& rule) {
    check_ell(ell);
    check_dim(dim);
    const double pref = gamma_n(dim) / binomial(2 * ell, ell);
    return pref * weighted_integral(dim, rule, [&](double u) { return ipow(u, 2 * ell); });
}

double ball_hat_auto(int dim, double s) {
    check_dim(dim);
    s = std::abs(s);
    auto& cache = hat_cache(dim);
    const auto key = radius_key(s);
    if (auto it = cache.find(key); it != cache.end())
        return it->second;
    const double v =
        gamma_n(dim) * weighted_integral_panels(dim, s, [&](double u) { return std::cos(u * s); });
    cache.emplace(key, v);
    return v;
}

double a_ell_auto(int ell, int dim, double s) {
    check_ell(ell);
    check_dim(dim);
    s = std::abs(s);
    if (s == 0.0)
        return 0.0;
    auto& cache = a_cache(ell, dim);
    const auto key = radius_key(s);
    if (auto it = cache.find(key); it != cache.end())
        return it->second;
    const double pref = gamma_n(dim) * ipow(4.0, ell) / binomial(2 * ell, ell);
    const double v = pref * weighted_integral_panels(dim, ell * s, [&](double u) {
                         return ipow(std::sin(0.5 * u * s), 2 * ell);
                     });
    cache.emplace(key, v);
    return v;
}

double m_ell_auto(int ell, int dim, double s) {
    const auto w = average_weights(ell);
    double acc = 0.0;
    for (int j = 1; j <= ell; ++j)
        acc += w[j - 1] * ball_hat_auto(dim, j * s);
    return acc;
}

double trig_identity_residual(int ell, double s) {
    check_ell(ell);
    const double lhs = ipow(4.0, ell) * ipow(std::sin(0.5 * s), 2 * ell);
    double rhs = binomial(2 * ell, ell);
    for (int j = 1; j <= ell; ++j)
        rhs += 2.0 * ((j % 2) ? -1.0 : 1.0) * binomial(2 * ell, ell - j) * std::cos(j * s);
    return std::abs(lhs - rhs);
}

BoundEstimate certify_ratio_bounds(int ell, int dim, double s_lo, double s_hi, int samples,
                                   const QuadratureRule& rule) {
    check_ell(ell);
    check_dim(dim);
    if (!(s_lo >= 0.0 && s_hi > s_lo))
        throw std::invalid_argument("certify_ratio_bounds needs 0 <= s_lo < s_hi");
    if (samples < 2)
        throw std::invalid_argument("certify_ratio_bounds needs at least 2 samples");

    BoundEstimate est;
    est.s_lo = s_lo;
    est.s_hi = s_hi;
    est.sample_count = samples;

    auto consider = [&](double s, double ratio) {
        if (est.c1_hat == 0.0 && est.c2_hat == 0.0) {
            est.c1_hat = est.c2_hat = ratio;
            est.argmin = est.argmax = s;
            return;
        }
        if (ratio < est.c1_hat) {
            est.c1_hat = ratio;
            est.argmin = s;
        }
        if (ratio > est.c2_hat) {
            est.c2_hat = ratio;
            est.argmax = s;
        }
    };

    // The interval is half open at the left; a left endpoint of 0 contributes
    // the analytic limit instead of a 0/0 evaluation.
    if (s_lo == 0.0)
        consider(0.0, a_ell_small_s_limit(ell, dim, rule));
    for (int i = 1; i <= samples; ++i) {
        const double s = s_lo + (s_hi - s_lo) * static_cast<double>(i) / samples;
        consider(s, a_ell(ell, dim, s, rule) / ipow(s, 2 * ell));
    }
    if (est.c1_hat <= 0.0 && est.s_hi <= 4.0 + 1e-12)
        throw std::runtime_error("invariant violation: nonpositive A_l(s)/s^(2l) on (0,4]");
    return est;
}

double BodySpec::outer_radius() const {
    return kind == BodyKind::euclidean_ball ? 1.0 : std::sqrt(static_cast<double>(dim));
}

namespace {
double sinc(double x) {
    if (std::abs(x) < 1e-8)
        return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}
} // namespace

double body_hat(const BodySpec& body, std::span<const double> x) {
    check_dim(body.dim);
    if (static_cast<int>(x.size()) < body.dim)
        throw std::invalid_argument("body_hat: frequency vector shorter than body dimension");
    if (body.kind == BodyKind::euclidean_ball) {
        double r2 = 0.0;
        for (int a = 0; a < body.dim; ++a)
            r2 += x[a] * x[a];
        return ball_hat_auto(body.dim, std::sqrt(r2));
    }
    double v = 1.0;
    for (int a = 0; a < body.dim; ++a)
        v *= sinc(x[a]);
    return v;
}

double a_ell_body(int ell, const BodySpec& body, std::span<const double> x,
                  const QuadratureRule& rule) {
    check_ell(ell);
    check_dim(body.dim);
    if (body.kind == BodyKind::euclidean_ball) {
        double r2 = 0.0;
        for (int a = 0; a < body.dim; ++a)
            r2 += x[a] * x[a];
        return a_ell(ell, body.dim, std::sqrt(r2), rule);
    }
    const int q = rule.node_count();
    const double pref = ipow(4.0, ell) / binomial(2 * ell, ell);
    // normalized tensor average over [-1,1]^n: map the [0,1] rule per axis
    const int n = body.dim;
    double acc = 0.0;
    std::array<int, 3> idx{0, 0, 0};
    const std::size_t total = static_cast<std::size_t>(ipow(static_cast<double>(q), n));
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rest = flat;
        double w = 1.0;
        double dot = 0.0;
        for (int a = 0; a < n; ++a) {
            idx[a] = static_cast<int>(rest % q);
            rest /= q;
            w *= rule.weights[idx[a]];
            dot += x[a] * (2.0 * rule.nodes[idx[a]] - 1.0);
        }
        acc += w * ipow(std::sin(0.5 * dot), 2 * ell);
    }
    return pref * acc;
}

double m_ell_body(int ell, const BodySpec& body, std::span<const double> x) {
    const auto w = average_weights(ell);
    double acc = 0.0;
    std::array<double, 3> jx{0.0, 0.0, 0.0};
    for (int j = 1; j <= ell; ++j) {
        for (int a = 0; a < body.dim; ++a)
            jx[a] = j * x[a];
        acc += w[j - 1] * body_hat(body, std::span<const double>(jx.data(), body.dim));
    }
    return acc;
}

BodyCheckReport body_ratio_and_derivative_check(int ell, const BodySpec& body,
                                                std::span<const double> radii, int directions,
                                                const QuadratureRule& rule, double fd_step,
                                                int gradient_stride) {
    check_ell(ell);
    BodyCheckReport rep;
    rep.directions = body.dim == 1 ? 1 : directions;
    rep.radii = static_cast<int>(radii.size());

    auto eval = [&](const std::array<double, 3>& x) {
        return a_ell_body(ell, body, std::span<const double>(x.data(), body.dim), rule);
    };
    auto grad_norm = [&](const std::array<double, 3>& x, double h) {
        double g2 = 0.0;
        for (int a = 0; a < body.dim; ++a) {
            auto xp = x, xm = x;
            xp[a] += h;
            xm[a] -= h;
            const double d = (eval(xp) - eval(xm)) / (2.0 * h);
            g2 += d * d;
        }
        return std::sqrt(g2);
    };

    bool first = true;
    for (int d = 0; d < rep.directions; ++d) {
        std::array<double, 3> dir{1.0, 0.0, 0.0};
        if (body.dim == 2) {
            const double th = kPi * static_cast<double>(d) / rep.directions; // half turn: -K = K
            dir = {std::cos(th), std::sin(th), 0.0};
        } else if (body.dim == 3) {
            const double th = kPi * static_cast<double>(d) / rep.directions;
            dir = {std::cos(th) * 0.8, std::sin(th) * 0.8, 0.6};
        }
        for (std::size_t ri = 0; ri < radii.size(); ++ri) {
            const double r = radii[ri];
            if (!(r > 0.0))
                throw std::invalid_argument("body sweep radii must be positive");
            std::array<double, 3> x{r * dir[0], r * dir[1], r * dir[2]};
            const double ratio = eval(x) / ipow(r, 2 * ell);
            if (first || ratio < rep.ratio_min) {
                rep.ratio_min = ratio;
                rep.argmin_radius = r;
            }
            if (first || ratio > rep.ratio_max) {
                rep.ratio_max = ratio;
                rep.argmax_radius = r;
            }
            first = false;
            if (ri % static_cast<std::size_t>(gradient_stride) == 0) {
                const double bound = std::min(ipow(r, 2 * ell - 1), 1.0);
                rep.grad_constant = std::max(rep.grad_constant, grad_norm(x, fd_step) / bound);
                rep.grad_constant_half =
                    std::max(rep.grad_constant_half, grad_norm(x, 0.5 * fd_step) / bound);
            }
        }
    }
    if (rep.ratio_min <= 0.0)
        throw std::runtime_error("invariant violation: nonpositive A_{l,K}(x)/|x|^(2l)");
    return rep;
}

std::string table_kind_name(TableKind kind) {
    switch (kind) {
    case TableKind::ball_hat:
        return "ball_hat";
    case TableKind::a_ell:
        return "A_ell";
    case TableKind::m_ell:
        return "m_ell";
    case TableKind::eta:
        return "eta";
    default:
        return "A_ell_ratio";
    }
}

std::function<double(double)> RadialMultiplierTable::profile() const {
    auto lookup = std::make_shared<std::unordered_map<std::uint64_t, double>>();
    lookup->reserve(entries.size());
    for (const auto& [s, v] : entries)
        lookup->emplace(radius_key(s), v);
    return [lookup](double s) {
        auto it = lookup->find(radius_key(s));
        if (it == lookup->end())
            throw std::domain_error("multiplier table has no entry at radius " +
                                    std::to_string(s));
        return it->second;
    };
}

RadialMultiplierTable build_multiplier_table(TableKind kind, int ell, int dim,
                                             std::span<const double> radii,
                                             const QuadratureRule& rule) {
    if (kind == TableKind::eta)
        throw std::invalid_argument("eta tables are built by the filter bank module");
    check_ell(ell);
    check_dim(dim);
    RadialMultiplierTable table;
    table.kind = kind;
    table.ell = ell;
    table.dim = dim;
    table.gamma = gamma_n(dim);
    table.rule_nodes = rule.node_count();
    table.entries.reserve(radii.size());

    std::vector<double> sorted(radii.begin(), radii.end());
    std::sort(sorted.begin(), sorted.end());
    for (double s : sorted) {
        if (s < 0.0)
            throw std::domain_error("multiplier tables need radii >= 0");
        double v = 0.0;
        switch (kind) {
        case TableKind::ball_hat:
            v = ball_hat(dim, s, rule);
            break;
        case TableKind::a_ell:
            v = a_ell(ell, dim, s, rule);
            break;
        case TableKind::m_ell:
            v = m_ell(ell, dim, s, rule);
            break;
        default: // a_ell_ratio
            v = s == 0.0 ? a_ell_small_s_limit(ell, dim, rule)
                         : a_ell(ell, dim, s, rule) / ipow(s, 2 * ell);
            break;
        }
        table.entries.emplace_back(s, v);
    }

    for (const auto& [s, v] : table.entries) {
        if (kind == TableKind::ball_hat && s == 0.0 && std::abs(v - 1.0) > 1e-13)
            throw std::runtime_error("table invariant violated: ball_hat(0) != 1");
        if (kind == TableKind::a_ell && (v < 0.0 || (s == 0.0 && v != 0.0)))
            throw std::runtime_error("table invariant violated: A_l must be >= 0 and A_l(0) = 0");
        if (kind == TableKind::m_ell || kind == TableKind::a_ell) {
            const double m = kind == TableKind::m_ell ? v : m_ell(ell, dim, s, rule);
            const double a = kind == TableKind::a_ell ? v : a_ell(ell, dim, s, rule);
            if (std::abs(m - (1.0 - a)) > 1e-10)
                throw std::runtime_error("table invariant violated: |m_l - (1 - A_l)| > 1e-10");
        }
    }
    return table;
}

} // namespace ballave
