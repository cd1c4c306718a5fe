#pragma once

#include <span>

#include "ballave/field.hpp"
#include "ballave/multipliers.hpp"

namespace ballave {

/// Dyadic Littlewood-Paley profiles built from one C^inf step h:
///   h = 1 on [0,1], h = 0 on [2,inf), strictly decreasing in between,
///   Phi_hat(s) = h(s),  phi_hat(s) = h(s) - h(2s).
/// phi_hat is supported in [1/2, 2] with phi_hat(1) = 1 exactly, and the
/// family telescopes: sum_{j in Z} phi_hat(2^{-j} s) = 1 for every s > 0,
/// Phi_hat(s) + sum_{j>=1} phi_hat(2^{-j} s) = 1 for every s >= 0.
///
/// The ramp glues e^{-1/x} bumps on the log2 axis, which keeps the profile
/// above c0 ~ 0.0798 on [3/5, 5/3].
struct FilterBank {
    int j_min = -1;
    int j_max = 12;
    double c0 = 0.0; // measured min of phi_hat over [3/5, 5/3]

    static double smooth_step(double s); // h
    static double phi(double s);         // h(s) - h(2s)
    static double Phi(double s);         // h(s)
};

/// Bank with the given dyadic range; c0 is measured on construction.
FilterBank build_bank(int j_min, int j_max);

/// Bank whose range covers every nonzero frequency magnitude of the grid.
FilterBank bank_for_grid(const GridSpec& grid);

/// Band piece (phi_{2^{-j}} * f)^ = phi_hat(2^{-j}|m|) f_hat(m).
SampledField band_project(const SampledField& f, int j, const FilterBank& bank);

/// Low band Phi_hat(|m|) f_hat(m); Phi_hat(0) = 1 keeps the mean.
SampledField low_band_project(const SampledField& f, const FilterBank& bank);

/// Proof-machinery operator (T_{k,j} f)^ = phi_hat(2^{-j}|m|) A_l(2^{-k}|m|) f_hat.
SampledField t_kj_apply(const SampledField& f, int k, int j, int ell, const FilterBank& bank);

/// eta(s) = phi_hat(s)/A_l(s) on the band support (A_l > 0 there); applying
/// eta(2^{-j}.) to f - B_{l,2^{-j}} f reproduces the band piece phi_j * f.
SampledField eta_project(const SampledField& f, int j, int ell, const FilterBank& bank);

/// eta tables need both the bank and A_l, so they are built here rather than
/// in the multiplier kit.
RadialMultiplierTable build_eta_table(const FilterBank& bank, int ell, int dim,
                                      std::span<const double> radii);

} // namespace ballave
