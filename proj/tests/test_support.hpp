#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "ballave/field.hpp"
#include "ballave/transform.hpp"

namespace ballave::testing {

// Deterministic generator independent of <random> distributions.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed * 0x9e3779b97f4a7c15ULL + 1) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double sym() { return 2.0 * uniform() - 1.0; }
};

// Random complex field with every mode populated.
inline SampledField random_field(const GridSpec& g, std::uint64_t seed) {
    Rng rng(seed);
    SampledField f(g);
    for (auto& v : f.values)
        v = Complex{rng.sym(), rng.sym()};
    return f;
}

// Real band-limited field: conjugate-symmetric spectrum with |m| <= cutoff,
// amplitudes decaying like (1+|m|)^{-decay}, optionally mean-free.
SampledField random_band_limited(const GridSpec& g, int cutoff, double decay, std::uint64_t seed,
                                 bool zero_mean = true);

// Plane wave exp(i m.x) on the grid.
SampledField plane_wave(const GridSpec& g, const std::array<int, 3>& m);

// Brute-force discrete transform, the oracle for the fast path.
SpectralField direct_forward(const SampledField& f);
SampledField direct_inverse(const SpectralField& F);

inline double rel_l2_error(const SampledField& a, const SampledField& b) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num += std::norm(a.values[i] - b.values[i]);
        den += std::norm(b.values[i]);
    }
    return std::sqrt(num / (den > 0.0 ? den : 1.0));
}

inline double max_abs_diff(const SampledField& a, const SampledField& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a.values[i] - b.values[i]));
    return m;
}

} // namespace ballave::testing
