#include "ballave/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ballave {

namespace {
void check_length(const GridSpec& g, std::size_t got) {
    if (got != g.point_count())
        throw std::invalid_argument("field length does not match grid point count");
}
} // namespace

SampledField::SampledField(GridSpec g, std::vector<Complex> v)
    : grid(g), values(std::move(v)) {
    check_length(grid, values.size());
}

SampledField::SampledField(GridSpec g) : grid(g), values(g.point_count(), Complex{0.0, 0.0}) {}

double SampledField::max_imag() const {
    double m = 0.0;
    for (const auto& v : values)
        m = std::max(m, std::abs(v.imag()));
    return m;
}

SpectralField::SpectralField(GridSpec g, std::vector<Complex> c)
    : grid(g), coefficients(std::move(c)) {
    check_length(grid, coefficients.size());
}

SpectralField::SpectralField(GridSpec g)
    : grid(g), coefficients(g.point_count(), Complex{0.0, 0.0}) {}

} // namespace ballave
