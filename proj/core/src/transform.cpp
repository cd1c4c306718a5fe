#include "ballave/transform.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace ballave {

namespace {

// Twiddle factors exp(-2 pi i k / n), k = 0..n/2-1, cached per length.
const std::vector<Complex>& twiddles(std::size_t n) {
    static std::unordered_map<std::size_t, std::vector<Complex>> cache;
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    std::vector<Complex> t(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
        const double ang = -kPeriod * static_cast<double>(k) / static_cast<double>(n);
        t[k] = Complex{std::cos(ang), std::sin(ang)};
    }
    return cache.emplace(n, std::move(t)).first->second;
}

// In-place iterative radix-2 transform of a contiguous line.
// sign = -1 forward (exp(-imx)), +1 inverse; no normalization.
void fft_line(Complex* a, std::size_t n, int sign) {
    // bit reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1)
            j ^= bit;
        j ^= bit;
        if (i < j)
            std::swap(a[i], a[j]);
    }
    const auto& tw = twiddles(n);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t step = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                Complex w = tw[k * step];
                if (sign > 0)
                    w = std::conj(w);
                const Complex u = a[i + k];
                const Complex v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }
}

// Transform along every axis of a row-major n-dimensional array.
void fft_nd(std::vector<Complex>& data, const GridSpec& g, int sign) {
    const std::size_t n = static_cast<std::size_t>(g.samples_per_axis);
    const std::size_t total = data.size();
    std::vector<Complex> line(n);
    for (int axis = 0; axis < g.dim; ++axis) {
        // stride between consecutive elements along `axis`
        std::size_t stride = 1;
        for (int a = g.dim - 1; a > axis; --a)
            stride *= n;
        const std::size_t lines = total / n;
        for (std::size_t l = 0; l < lines; ++l) {
            // base offset of the l-th line along this axis
            const std::size_t block = stride * n;
            const std::size_t base = (l / stride) * block + (l % stride);
            if (stride == 1) {
                fft_line(data.data() + base, n, sign);
            } else {
                for (std::size_t i = 0; i < n; ++i)
                    line[i] = data[base + i * stride];
                fft_line(line.data(), n, sign);
                for (std::size_t i = 0; i < n; ++i)
                    data[base + i * stride] = line[i];
            }
        }
    }
}

} // namespace

SpectralField forward_transform(const SampledField& f) {
    SpectralField F(f.grid, f.values);
    fft_nd(F.coefficients, f.grid, -1);
    const double scale = 1.0 / static_cast<double>(f.grid.point_count());
    for (auto& c : F.coefficients)
        c *= scale;
    return F;
}

SampledField inverse_transform(const SpectralField& F) {
    SampledField f(F.grid, F.coefficients);
    fft_nd(f.values, F.grid, +1);
    return f;
}

double lp_norm(const SampledField& f, double p) {
    if (!(p > 1.0))
        throw std::invalid_argument("lp_norm requires p > 1");
    if (std::isinf(p)) {
        double m = 0.0;
        for (const auto& v : f.values)
            m = std::max(m, std::abs(v));
        return m;
    }
    double acc = 0.0;
    for (const auto& v : f.values)
        acc += std::pow(std::abs(v), p);
    return std::pow(acc * f.grid.cell_measure(), 1.0 / p);
}

SpectralField apply_radial_multiplier(const SpectralField& F,
                                      const std::function<double(double)>& mu) {
    SpectralField out(F.grid);
    std::unordered_map<std::int64_t, double> memo;
    memo.reserve(256);
    for (std::size_t i = 0; i < F.size(); ++i) {
        const std::int64_t m2 = frequency_sq(F.grid, i);
        auto it = memo.find(m2);
        if (it == memo.end()) {
            const double v = mu(std::sqrt(static_cast<double>(m2)));
            if (!std::isfinite(v))
                throw std::domain_error("radial multiplier undefined at radius sqrt(" +
                                        std::to_string(m2) + ")");
            it = memo.emplace(m2, v).first;
        }
        out.coefficients[i] = F.coefficients[i] * it->second;
    }
    return out;
}

SpectralField apply_symbol(const SpectralField& F,
                           const std::function<double(const std::array<int, 3>&)>& symbol) {
    SpectralField out(F.grid);
    for (std::size_t i = 0; i < F.size(); ++i) {
        const double v = symbol(frequency_vector(F.grid, i));
        if (!std::isfinite(v))
            throw std::domain_error("symbol undefined at a grid frequency");
        out.coefficients[i] = F.coefficients[i] * v;
    }
    return out;
}

SampledField filter_field(const SampledField& f, const std::function<double(double)>& mu) {
    return inverse_transform(apply_radial_multiplier(forward_transform(f), mu));
}

} // namespace ballave
