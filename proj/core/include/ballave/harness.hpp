#pragma once

#include <cstdint>
#include <string>

#include "ballave/fitting.hpp"
#include "ballave/norms.hpp"

namespace ballave {

/// Desk-scale test functions of known smoothness.
///  - weierstrass: W_a(x) = sum_{j=0..J} 2^{-j a} cos(2^j x_1), one mode per
///    octave, so its band decomposition is exact.
///  - band_bump: fixed smooth radial spectral profile on the annulus
///    [2^{k0-1}, 2^{k0+1}], normalized to sup norm 1.
///  - power_spectrum: random phases with |f_hat(m)| = (1+|m|)^{-(a+n/2)} up to
///    the band limit 2^J, conjugate-symmetric so the field is real.
///  - smooth_reference: cos(x_1).
enum class Family { weierstrass, band_bump, power_spectrum, smooth_reference };

std::string family_name(Family family);

struct TestFunctionSpec {
    Family family = Family::smooth_reference;
    double alpha = 1.0;     // target smoothness (weierstrass / power_spectrum)
    int top_level = 7;      // J; doubles as the power_spectrum band-limit exponent
    int band_center = 4;    // k0 (band_bump)
    std::uint64_t seed = 1; // phases (power_spectrum)
    GridSpec grid{1, 256};
};

/// Deterministic: identical spec and seed give a bitwise-identical field.
SampledField generate(const TestFunctionSpec& spec);

/// Least-squares slope of log2 || f - B_{l,2^{-k}} f ||_p against k over the
/// window; needs at least 4 scales above the noise floor.
SlopeFit decay_slope(const SampledField& f, int ell, double p, ScaleRange window);

/// Default fit window for a Weierstrass slope study: k in [2, J-4] clamped to
/// the admissible scales. Lower k still feels the j<k lattice edge and higher
/// k the truncation of the lacunary series at J.
ScaleRange default_slope_window(int top_level, int ell, const GridSpec& grid);

struct RatioEntry {
    std::string label;
    double ball_norm = 0.0;
    double classical_norm = 0.0;
    double ratio = 0.0;
};

struct RatioStudy {
    std::vector<RatioEntry> entries;
    double min_ratio = 0.0;
    double max_ratio = 0.0;
    int grid_samples = 0;
};

/// Ball-method vs classical norm ratio over a family, identical
/// (alpha, p, q, range) for both methods.
RatioStudy equivalence_study(std::span<const TestFunctionSpec> family, NormParams params,
                             const FilterBank& bank);

struct RefinementRow {
    int samples = 0;
    double value = 0.0;
    double rel_change = 0.0; // vs the previous grid
};

/// Recomputes one norm across grid sizes; families here are band-limited, so
/// the sampled function is the same continuum object at every N.
std::vector<RefinementRow> refinement_study(TestFunctionSpec spec, NormParams params,
                                            std::span<const int> sample_counts);

/// The family used by the equivalence and stability studies: W_alpha, two
/// band bumps and a random power-spectrum field, all band-limited to 2^7.
std::vector<TestFunctionSpec> standard_family(double alpha, const GridSpec& grid);

} // namespace ballave
