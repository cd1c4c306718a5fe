#pragma once

#include <span>

namespace ballave {

/// Least-squares line through (x, y) pairs, usually in log2-log2 coordinates.
/// The window and the worst deviation from the line are always reported.
struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double x_lo = 0.0;
    double x_hi = 0.0;
    double max_residual = 0.0;
    int points = 0;
    bool degenerate = false; // data at the noise floor; slope not meaningful
};

SlopeFit fit_line(std::span<const double> x, std::span<const double> y);

} // namespace ballave
