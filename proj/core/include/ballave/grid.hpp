#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <numbers>

namespace ballave {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kPeriod = 2.0 * kPi;

/// Discrete periodic torus (R/2piZ)^n sampled on a uniform lattice.
///
/// Grid points are x_i = 2*pi*i/N per axis and integer frequencies live in
/// [-N/2, N/2) per axis, stored in the usual FFT order (0..N/2-1, -N/2..-1).
/// Flat indices are row major with axis 0 slowest.
struct GridSpec {
    int dim = 1;              // n in {1,2,3}
    int samples_per_axis = 8; // N, a power of two, N >= 8

    std::size_t point_count() const {
        std::size_t c = 1;
        for (int a = 0; a < dim; ++a)
            c *= static_cast<std::size_t>(samples_per_axis);
        return c;
    }
    double spacing() const { return kPeriod / samples_per_axis; }
    /// Quadrature weight of one grid cell, (2*pi/N)^n.
    double cell_measure() const {
        double m = 1.0;
        for (int a = 0; a < dim; ++a)
            m *= spacing();
        return m;
    }
    int nyquist() const { return samples_per_axis / 2; }

    bool operator==(const GridSpec&) const = default;
};

/// Validates dim in {1,2,3} and N a power of two >= 8; throws std::invalid_argument.
GridSpec make_grid(int dim, int samples_per_axis);

/// Decomposes a flat row-major index into per-axis lattice indices.
std::array<int, 3> lattice_index(const GridSpec& g, std::size_t flat);

/// Integer frequency along `axis` for the flat index, in [-N/2, N/2).
int axis_frequency(const GridSpec& g, std::size_t flat, int axis);

/// Full integer frequency vector (unused axes zero).
std::array<int, 3> frequency_vector(const GridSpec& g, std::size_t flat);

/// |m|^2 as an exact integer; the key used for radial multiplier lookup.
std::int64_t frequency_sq(const GridSpec& g, std::size_t flat);

} // namespace ballave
