#include "ballave/filter_bank.hpp"

#include <cmath>
#include <stdexcept>

#include "ballave/transform.hpp"

namespace ballave {

namespace {

double bump(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

double ldexp1(int k) { return std::ldexp(1.0, k); }

} // namespace

double FilterBank::smooth_step(double s) {
    if (s <= 1.0)
        return 1.0;
    if (s >= 2.0)
        return 0.0;
    const double u = std::log2(s); // in (0,1)
    const double a = bump(1.0 - u);
    return a / (a + bump(u));
}

double FilterBank::phi(double s) { return smooth_step(s) - smooth_step(2.0 * s); }

double FilterBank::Phi(double s) { return smooth_step(s); }

FilterBank build_bank(int j_min, int j_max) {
    if (j_min > j_max)
        throw std::invalid_argument("filter bank needs j_min <= j_max");
    FilterBank bank;
    bank.j_min = j_min;
    bank.j_max = j_max;
    double c0 = 1.0;
    const int samples = 4096;
    for (int i = 0; i <= samples; ++i) {
        const double s = 0.6 + (5.0 / 3.0 - 0.6) * i / samples;
        c0 = std::min(c0, FilterBank::phi(s));
    }
    bank.c0 = c0;
    return bank;
}

FilterBank bank_for_grid(const GridSpec& grid) {
    const double max_radius =
        std::sqrt(static_cast<double>(grid.dim)) * grid.nyquist();
    // phi_hat(2^{-j}s) vanishes once 2^{-j}s <= 1/2; covering [1, max_radius]
    // needs j from -1 up to ceil(log2(max_radius)) + 1.
    const int j_hi = static_cast<int>(std::ceil(std::log2(max_radius))) + 1;
    return build_bank(-1, j_hi);
}

SampledField band_project(const SampledField& f, int j, const FilterBank& bank) {
    if (j < bank.j_min || j > bank.j_max)
        throw std::out_of_range("band index outside the bank range");
    const double scale = ldexp1(-j);
    return filter_field(f, [scale](double s) { return FilterBank::phi(scale * s); });
}

SampledField low_band_project(const SampledField& f, const FilterBank&) {
    return filter_field(f, [](double s) { return FilterBank::Phi(s); });
}

SampledField t_kj_apply(const SampledField& f, int k, int j, int ell, const FilterBank& bank) {
    if (j < bank.j_min || j > bank.j_max)
        throw std::out_of_range("band index outside the bank range");
    const double sj = ldexp1(-j);
    const double sk = ldexp1(-k);
    const int dim = f.grid.dim;
    return filter_field(f, [sj, sk, dim, ell](double s) {
        const double band = FilterBank::phi(sj * s);
        return band == 0.0 ? 0.0 : band * a_ell_auto(ell, dim, sk * s);
    });
}

SampledField eta_project(const SampledField& f, int j, int ell, const FilterBank& bank) {
    if (j < bank.j_min || j > bank.j_max)
        throw std::out_of_range("band index outside the bank range");
    const double sj = ldexp1(-j);
    const int dim = f.grid.dim;
    return filter_field(f, [sj, dim, ell](double s) {
        const double band = FilterBank::phi(sj * s);
        if (band == 0.0)
            return 0.0;
        const double a = a_ell_auto(ell, dim, sj * s);
        if (a < 1e-14)
            throw std::runtime_error("invariant violation: A_l vanished inside the band support");
        return band / a;
    });
}

RadialMultiplierTable build_eta_table(const FilterBank& bank, int ell, int dim,
                                      std::span<const double> radii) {
    RadialMultiplierTable table;
    table.kind = TableKind::eta;
    table.ell = ell;
    table.dim = dim;
    table.gamma = bank.c0;
    table.rule_nodes = 0;
    for (double s : radii) {
        const double band = FilterBank::phi(s);
        table.entries.emplace_back(s, band == 0.0 ? 0.0 : band / a_ell_auto(ell, dim, s));
    }
    return table;
}

} // namespace ballave
