#include "ballave/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ballave {

SlopeFit fit_line(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_line needs >= 2 matching points");
    const auto n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double det = n * sxx - sx * sx;
    if (det == 0.0)
        throw std::invalid_argument("fit_line abscissae are degenerate");
    SlopeFit fit;
    fit.slope = (n * sxy - sx * sy) / det;
    fit.intercept = (sy - fit.slope * sx) / n;
    fit.points = static_cast<int>(x.size());
    fit.x_lo = *std::min_element(x.begin(), x.end());
    fit.x_hi = *std::max_element(x.begin(), x.end());
    for (std::size_t i = 0; i < x.size(); ++i)
        fit.max_residual =
            std::max(fit.max_residual, std::abs(y[i] - (fit.slope * x[i] + fit.intercept)));
    return fit;
}

} // namespace ballave
