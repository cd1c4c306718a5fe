#pragma once

#include <complex>
#include <vector>

#include "ballave/grid.hpp"

namespace ballave {

using Complex = std::complex<double>;

/// A function sampled on the torus lattice, row-major values of length N^n.
struct SampledField {
    GridSpec grid;
    std::vector<Complex> values;

    SampledField() = default;
    SampledField(GridSpec g, std::vector<Complex> v);
    /// Zero field on a grid.
    explicit SampledField(GridSpec g);

    std::size_t size() const { return values.size(); }
    /// Largest imaginary magnitude; a field flagged real keeps this below 1e-10.
    double max_imag() const;
};

/// Fourier coefficients f_hat(m) indexed by integer frequency (FFT order).
struct SpectralField {
    GridSpec grid;
    std::vector<Complex> coefficients;

    SpectralField() = default;
    SpectralField(GridSpec g, std::vector<Complex> c);
    explicit SpectralField(GridSpec g);

    std::size_t size() const { return coefficients.size(); }
};

} // namespace ballave
