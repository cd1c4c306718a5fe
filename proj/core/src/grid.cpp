#include "ballave/grid.hpp"

#include <stdexcept>
#include <string>

namespace ballave {

GridSpec make_grid(int dim, int samples_per_axis) {
    if (dim < 1 || dim > 3)
        throw std::invalid_argument("grid dimension must be 1, 2 or 3, got " + std::to_string(dim));
    const int n = samples_per_axis;
    if (n < 8 || (n & (n - 1)) != 0)
        throw std::invalid_argument("samples per axis must be a power of two >= 8, got " +
                                    std::to_string(n));
    return GridSpec{dim, samples_per_axis};
}

std::array<int, 3> lattice_index(const GridSpec& g, std::size_t flat) {
    std::array<int, 3> idx{0, 0, 0};
    const auto n = static_cast<std::size_t>(g.samples_per_axis);
    for (int a = g.dim - 1; a >= 0; --a) {
        idx[a] = static_cast<int>(flat % n);
        flat /= n;
    }
    return idx;
}

int axis_frequency(const GridSpec& g, std::size_t flat, int axis) {
    return frequency_vector(g, flat)[axis];
}

std::array<int, 3> frequency_vector(const GridSpec& g, std::size_t flat) {
    auto idx = lattice_index(g, flat);
    const int n = g.samples_per_axis;
    std::array<int, 3> m{0, 0, 0};
    for (int a = 0; a < g.dim; ++a)
        m[a] = idx[a] < n / 2 ? idx[a] : idx[a] - n;
    return m;
}

std::int64_t frequency_sq(const GridSpec& g, std::size_t flat) {
    auto m = frequency_vector(g, flat);
    std::int64_t s = 0;
    for (int a = 0; a < g.dim; ++a)
        s += static_cast<std::int64_t>(m[a]) * m[a];
    return s;
}

} // namespace ballave
