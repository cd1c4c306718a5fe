#include "ballave/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ballave {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double dyadic(int k) { return std::ldexp(1.0, -k); }

int max_scale_for_grid(const GridSpec& g) {
    // k_max <= log2(N/2)
    int k = 0;
    for (int n = g.samples_per_axis / 2; n > 1; n /= 2)
        ++k;
    return k;
}

int ball_k_min(int ell, const BodySpec& body) {
    int k = -8;
    while (ell * dyadic(k) * body.outer_radius() >= kPi)
        ++k;
    return k;
}

// Largest m whose ball radius 2^{-m} spans at least 4 grid cells.
int grid_m_cap(const GridSpec& g) {
    return static_cast<int>(std::floor(std::log2(g.samples_per_axis / (8.0 * kPi))));
}

// |piece_k| fields for every scale in [k_lo, k_hi]; one forward transform.
std::vector<std::vector<double>> scale_pieces(const SampledField& f, const NormParams& params,
                                              int k_lo, int k_hi) {
    const SpectralField F = forward_transform(f);
    const int dim = f.grid.dim;
    BodySpec body = params.body;
    body.dim = dim;

    std::vector<std::vector<double>> pieces;
    pieces.reserve(static_cast<std::size_t>(k_hi - k_lo + 1));
    for (int k = k_lo; k <= k_hi; ++k) {
        SpectralField filtered(f.grid);
        if (params.method == Method::classical) {
            const bool low_pass = !params.homogeneous && k == 0;
            const double scale = dyadic(k);
            filtered = apply_radial_multiplier(F, [low_pass, scale](double s) {
                return low_pass ? FilterBank::Phi(s) : FilterBank::phi(scale * s);
            });
        } else if (body.kind == BodyKind::euclidean_ball) {
            const double t = dyadic(k);
            filtered = apply_radial_multiplier(
                F, [t, dim, ell = params.ell](double s) { return a_ell_auto(ell, dim, t * s); });
        } else {
            const double t = dyadic(k);
            filtered = apply_symbol(F, [t, body, ell = params.ell](const std::array<int, 3>& m) {
                std::array<double, 3> x{t * m[0], t * m[1], t * m[2]};
                return 1.0 - m_ell_body(ell, body, std::span<const double>(x.data(), body.dim));
            });
        }
        const SampledField piece = inverse_transform(filtered);
        std::vector<double> mag(piece.size());
        for (std::size_t i = 0; i < piece.size(); ++i)
            mag[i] = std::abs(piece.values[i]);
        pieces.push_back(std::move(mag));
    }
    return pieces;
}

double lp_of_magnitudes(const GridSpec& g, const std::vector<double>& mag, double p) {
    if (std::isinf(p))
        return *std::max_element(mag.begin(), mag.end());
    double acc = 0.0;
    for (double v : mag)
        acc += std::pow(v, p);
    return std::pow(acc * g.cell_measure(), 1.0 / p);
}

// First scale index the definition sums from.
int first_scale(const NormParams& params) {
    if (params.homogeneous)
        return params.range->k_min;
    return params.method == Method::ball ? 1 : 0;
}

} // namespace

ScaleRange default_scale_range(const NormParams& params, const GridSpec& grid) {
    ScaleRange r;
    r.k_max = max_scale_for_grid(grid) - 2;
    if (params.method == Method::ball) {
        BodySpec body = params.body;
        body.dim = grid.dim;
        r.k_min = ball_k_min(params.ell, body);
    } else {
        r.k_min = params.homogeneous ? -1 : 0;
    }
    if (!params.homogeneous)
        r.k_min = std::max(r.k_min, params.method == Method::ball ? 1 : 0);
    return r;
}

void validate_norm_params(const NormParams& params, const GridSpec& grid) {
    if (!(params.p > 1.0))
        throw std::invalid_argument("norms need p > 1");
    if (!(params.alpha > 0.0))
        throw std::invalid_argument("norms need alpha > 0");
    if (params.space == Space::triebel_lizorkin && !(params.q > 1.0))
        throw std::invalid_argument("Triebel-Lizorkin norms need q > 1");
    if (params.space == Space::besov && !(params.q > 0.0))
        throw std::invalid_argument("Besov norms need q > 0");
    if (!params.range)
        throw std::invalid_argument("norm parameters need a resolved scale range");
    const ScaleRange range = *params.range;
    if (params.method == Method::ball) {
        if (params.ell < 1)
            throw std::invalid_argument("ball method needs ell >= 1");
        if (!(params.alpha < 2.0 * params.ell))
            throw std::invalid_argument("ball method needs alpha in (0, 2*ell)");
        BodySpec body = params.body;
        body.dim = grid.dim;
        if (range.k_min < ball_k_min(params.ell, body))
            throw std::invalid_argument("scale range violates the torus embedding constraint");
    }
    if (range.k_min > range.k_max)
        throw std::invalid_argument("scale range is empty");
    if (range.k_max > max_scale_for_grid(grid))
        throw std::invalid_argument("scale range exceeds log2(N/2)");
    if (params.center_stride < 1)
        throw std::invalid_argument("center stride must be >= 1");
}

double lq_aggregate(std::span<const double> values, double q) {
    if (values.empty())
        return 0.0;
    if (std::isinf(q))
        return *std::max_element(values.begin(), values.end());
    double acc = 0.0;
    for (double v : values)
        acc += std::pow(v, q);
    return std::pow(acc, 1.0 / q);
}

NormReport besov_norm(const SampledField& f, NormParams params, const FilterBank& bank) {
    params.space = Space::besov;
    if (!params.range)
        params.range = default_scale_range(params, f.grid);
    params.body.dim = f.grid.dim;
    validate_norm_params(params, f.grid);
    (void)bank; // profiles are evaluated through FilterBank's static shape

    NormReport rep;
    rep.params = params;
    const int k_lo = first_scale(params);
    const int k_hi = params.range->k_max;
    const auto pieces = scale_pieces(f, params, k_lo, k_hi);

    std::vector<double> summands;
    for (int k = k_lo; k <= k_hi; ++k) {
        const double v = std::pow(2.0, k * params.alpha) *
                         lp_of_magnitudes(f.grid, pieces[static_cast<std::size_t>(k - k_lo)],
                                          params.p);
        rep.per_scale.push_back({k, v});
        summands.push_back(v);
    }
    rep.aggregate = lq_aggregate(summands, params.q);
    if (!params.homogeneous && params.method == Method::ball) {
        rep.lp_term = lp_norm(f, params.p);
        rep.aggregate += rep.lp_term;
    }
    return rep;
}

namespace {

// sup_x sup_m ( avg_{B(x, 2^{-m})} sum_{k >= m} (2^{k a} |piece_k|)^q )^{1/q}
// with the q = inf modification: sup over scales inside, ess sup over the ball.
double carleson_sup(const SampledField& f, const NormParams& params,
                    const std::vector<std::vector<double>>& pieces, int k_lo,
                    std::vector<int>& excluded) {
    const GridSpec& g = f.grid;
    const int k_hi = params.range->k_max;
    const bool qinf = std::isinf(params.q);
    const int m_lo = params.homogeneous ? params.range->k_min
                                        : (params.method == Method::ball ? 1 : 0);
    const int m_cap = grid_m_cap(g);
    const int m_hi = std::min(k_hi, m_cap);
    for (int m = m_hi + 1; m <= k_hi; ++m)
        excluded.push_back(m);
    if (m_hi < m_lo)
        throw std::invalid_argument("no admissible ball scale: grid too coarse for p = inf");

    std::vector<double> tail(g.point_count(), 0.0);
    auto absorb = [&](int k) {
        if (k < k_lo || k > k_hi)
            return;
        const auto& mag = pieces[static_cast<std::size_t>(k - k_lo)];
        const double w = std::pow(2.0, k * params.alpha);
        if (qinf) {
            for (std::size_t i = 0; i < tail.size(); ++i)
                tail[i] = std::max(tail[i], w * mag[i]);
        } else {
            for (std::size_t i = 0; i < tail.size(); ++i)
                tail[i] += std::pow(w * mag[i], params.q);
        }
    };

    for (int k = k_hi; k > m_hi; --k)
        absorb(k);

    double best = 0.0;
    for (int m = m_hi; m >= m_lo; --m) {
        absorb(m);
        if (qinf) {
            // ess sup over any ball = global sup; every point is some center.
            best = std::max(best, *std::max_element(tail.begin(), tail.end()));
            continue;
        }
        const auto mean = periodic_ball_mean(g, tail, dyadic(m));
        double worst = 0.0;
        for (std::size_t i = 0; i < mean.size(); i += static_cast<std::size_t>(params.center_stride))
            worst = std::max(worst, mean[i]);
        best = std::max(best, std::pow(worst, 1.0 / params.q));
    }
    return best;
}

} // namespace

NormReport tl_norm(const SampledField& f, NormParams params, const FilterBank& bank) {
    params.space = Space::triebel_lizorkin;
    if (!params.range)
        params.range = default_scale_range(params, f.grid);
    params.body.dim = f.grid.dim;
    validate_norm_params(params, f.grid);
    (void)bank;

    NormReport rep;
    rep.params = params;
    const int k_lo = first_scale(params);
    const int k_hi = params.range->k_max;
    const auto pieces = scale_pieces(f, params, k_lo, k_hi);

    for (int k = k_lo; k <= k_hi; ++k)
        rep.per_scale.push_back(
            {k, std::pow(2.0, k * params.alpha) *
                    lp_of_magnitudes(f.grid, pieces[static_cast<std::size_t>(k - k_lo)],
                                     params.p)});

    if (std::isinf(params.p)) {
        rep.aggregate = carleson_sup(f, params, pieces, k_lo, rep.excluded_ball_scales);
    } else {
        const bool qinf = std::isinf(params.q);
        std::vector<double> inner(f.size(), 0.0);
        for (int k = k_lo; k <= k_hi; ++k) {
            const auto& mag = pieces[static_cast<std::size_t>(k - k_lo)];
            const double w = std::pow(2.0, k * params.alpha);
            if (qinf) {
                for (std::size_t i = 0; i < inner.size(); ++i)
                    inner[i] = std::max(inner[i], w * mag[i]);
            } else {
                for (std::size_t i = 0; i < inner.size(); ++i)
                    inner[i] += std::pow(w * mag[i], params.q);
            }
        }
        if (!qinf)
            for (auto& v : inner)
                v = std::pow(v, 1.0 / params.q);
        rep.aggregate = lp_of_magnitudes(f.grid, inner, params.p);
    }

    if (!params.homogeneous && params.method == Method::ball) {
        rep.lp_term = lp_norm(f, params.p);
        rep.aggregate += rep.lp_term;
    }
    return rep;
}

NormReport compute_norm(const SampledField& f, const NormParams& params, const FilterBank& bank) {
    return params.space == Space::besov ? besov_norm(f, params, bank) : tl_norm(f, params, bank);
}

std::vector<double> periodic_ball_mean(const GridSpec& g, const std::vector<double>& v,
                                       double radius) {
    if (v.size() != g.point_count())
        throw std::invalid_argument("field length does not match grid");
    if (!(radius > 0.0))
        throw std::invalid_argument("ball mean needs a positive radius");
    const int n = g.samples_per_axis;
    const double h = g.spacing();
    const int w = static_cast<int>(std::floor(radius / h));
    std::vector<double> out(v.size());

    if (g.dim == 1) {
        if (2 * w + 1 >= n) {
            double mean = 0.0;
            for (double x : v)
                mean += x;
            mean /= static_cast<double>(n);
            std::fill(out.begin(), out.end(), mean);
            return out;
        }
        std::vector<double> prefix(3 * static_cast<std::size_t>(n) + 1, 0.0);
        for (std::size_t i = 0; i < 3 * static_cast<std::size_t>(n); ++i)
            prefix[i + 1] = prefix[i] + v[i % n];
        const double inv = 1.0 / (2 * w + 1);
        for (int i = 0; i < n; ++i) {
            const int lo = i - w + n; // shifted into the doubled array
            const int hi = i + w + n;
            out[static_cast<std::size_t>(i)] =
                (prefix[static_cast<std::size_t>(hi + 1)] - prefix[static_cast<std::size_t>(lo)]) *
                inv;
        }
        return out;
    }

    // fundamental-domain offsets (-N/2, N/2] per axis; each periodic cell once
    std::vector<std::array<int, 3>> offsets;
    const double r2 = radius * radius;
    std::array<int, 3> d{0, 0, 0};
    const int lo = -n / 2 + 1, hi = n / 2;
    const int lo1 = g.dim >= 2 ? lo : 0, hi1 = g.dim >= 2 ? hi : 0;
    const int lo2 = g.dim >= 3 ? lo : 0, hi2 = g.dim >= 3 ? hi : 0;
    for (d[0] = lo; d[0] <= hi; ++d[0])
        for (d[1] = lo1; d[1] <= hi1; ++d[1])
            for (d[2] = lo2; d[2] <= hi2; ++d[2]) {
                double dist2 = 0.0;
                for (int a = 0; a < g.dim; ++a)
                    dist2 += (d[a] * h) * (d[a] * h);
                if (dist2 <= r2)
                    offsets.push_back(d);
            }
    const double inv = 1.0 / static_cast<double>(offsets.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto idx = lattice_index(g, i);
        double acc = 0.0;
        for (const auto& off : offsets) {
            std::size_t flat = 0;
            for (int a = 0; a < g.dim; ++a) {
                int j = (idx[a] + off[a]) % n;
                if (j < 0)
                    j += n;
                flat = flat * static_cast<std::size_t>(n) + static_cast<std::size_t>(j);
            }
            acc += v[flat];
        }
        out[i] = acc * inv;
    }
    return out;
}

SampledField hl_maximal(const SampledField& f) {
    const GridSpec& g = f.grid;
    std::vector<double> mag(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        mag[i] = std::abs(f.values[i]);

    SampledField out(g);
    for (std::size_t i = 0; i < f.size(); ++i)
        out.values[i] = mag[i]; // own cell

    const int k_hi = static_cast<int>(std::floor(std::log2(g.samples_per_axis / kPeriod)));
    for (int k = -2; k <= k_hi; ++k) {
        const auto mean = periodic_ball_mean(g, mag, dyadic(k));
        for (std::size_t i = 0; i < f.size(); ++i)
            out.values[i] = std::max(out.values[i].real(), mean[i]);
    }
    return out;
}

MaximalControlReport maximal_control_check(const SampledField& f, int ell, const FilterBank& bank,
                                           std::span<const int> scales) {
    MaximalControlReport rep;
    double fmax = 0.0;
    for (const auto& v : f.values)
        fmax = std::max(fmax, std::abs(v));
    const double floor_level = 1e-14 * std::max(fmax, 1.0);

    for (int j : scales) {
        const SampledField band = band_project(f, j, bank);
        const SampledField diff = ball_difference(
            f, AverageSpec{ell, dyadic(j), BodySpec{BodyKind::euclidean_ball, f.grid.dim}});
        const SampledField maximal = hl_maximal(diff);
        double cj = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i) {
            const double num = std::abs(band.values[i]);
            const double den = maximal.values[i].real();
            if (den <= floor_level) {
                if (num > floor_level)
                    ++rep.excluded_sites;
                continue;
            }
            cj = std::max(cj, num / den);
        }
        rep.per_scale.push_back({j, cj});
        rep.max_constant = std::max(rep.max_constant, cj);
    }
    return rep;
}

HardyReport discrete_hardy_check(const DyadicSequence& a, double beta, double q) {
    if (!(beta > 0.0) || !(q > 0.0))
        throw std::invalid_argument("hardy check needs beta > 0 and q > 0");
    HardyReport rep;
    if (a.values.empty())
        return rep;
    const int k0 = a.first_k;
    const int k1 = a.first_k + static_cast<int>(a.values.size()) - 1;
    auto av = [&](int k) { return std::abs(a.values[static_cast<std::size_t>(k - k0)]); };

    double total = 0.0;
    for (int k = k0; k <= k1; ++k)
        total += av(k);
    if (total == 0.0)
        return rep;

    if (std::isinf(q)) {
        double tail = 0.0; // sum_{j >= k}, built from the top
        double lhs_t = 0.0, rhs_t = 0.0, lhs_h = 0.0, rhs_h = 0.0, head = 0.0;
        for (int k = k1; k >= k0; --k) {
            tail += av(k);
            lhs_t = std::max(lhs_t, std::exp2(k * beta) * tail);
            rhs_t = std::max(rhs_t, std::exp2(k * beta) * av(k));
        }
        for (int k = k0; k <= k1; ++k) {
            head += av(k);
            lhs_h = std::max(lhs_h, std::exp2(-k * beta) * head);
            rhs_h = std::max(rhs_h, std::exp2(-k * beta) * av(k));
        }
        rep.lhs_tail = lhs_t;
        rep.rhs_tail = rhs_t;
        rep.ratio_tail = lhs_t / rhs_t;
        rep.lhs_head = lhs_h;
        rep.rhs_head = rhs_h;
        rep.ratio_head = lhs_h / rhs_h;
        return rep;
    }

    const double r = std::exp2(-beta * q); // in (0,1)
    const double geom = r / (1.0 - r);     // sum_{i >= 1} r^i
    double lhs_t = std::exp2(k0 * beta * q) * geom * std::pow(total, q);
    double rhs_t = 0.0;
    double tail = 0.0;
    for (int k = k1; k >= k0; --k) {
        tail += av(k);
        lhs_t += std::exp2(k * beta * q) * std::pow(tail, q);
        rhs_t += std::exp2(k * beta * q) * std::pow(av(k), q);
    }
    double lhs_h = std::exp2(-k1 * beta * q) * geom * std::pow(total, q);
    double rhs_h = 0.0;
    double head = 0.0;
    for (int k = k0; k <= k1; ++k) {
        head += av(k);
        lhs_h += std::exp2(-k * beta * q) * std::pow(head, q);
        rhs_h += std::exp2(-k * beta * q) * std::pow(av(k), q);
    }
    rep.lhs_tail = std::pow(lhs_t, 1.0 / q);
    rep.rhs_tail = std::pow(rhs_t, 1.0 / q);
    rep.ratio_tail = rep.lhs_tail / rep.rhs_tail;
    rep.lhs_head = std::pow(lhs_h, 1.0 / q);
    rep.rhs_head = std::pow(rhs_h, 1.0 / q);
    rep.ratio_head = rep.lhs_head / rep.rhs_head;
    return rep;
}

} // namespace ballave
