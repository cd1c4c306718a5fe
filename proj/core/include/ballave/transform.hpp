#pragma once

#include <array>
#include <functional>

#include "ballave/field.hpp"

namespace ballave {

/// Forward transform: f_hat(m) = N^{-n} sum_i f(x_i) exp(-i m.x_i).
///
/// Under this convention, convolving against an L1-normalized kernel on R^n
/// multiplies coefficient m by the kernel's continuum transform
/// k_hat(xi) = int k(x) exp(-i x.xi) dx evaluated at xi = m, so radial
/// multiplier symbols plug in without rescaling.
SpectralField forward_transform(const SampledField& f);

/// Exact inverse of forward_transform: f(x_i) = sum_m f_hat(m) exp(i m.x_i).
SampledField inverse_transform(const SpectralField& F);

/// Grid L^p norm: (sum_i |f(x_i)|^p (2pi/N)^n)^{1/p}; p = infinity -> max.
/// Requires p > 1 (use std::numeric_limits<double>::infinity() for sup).
double lp_norm(const SampledField& f, double p);

/// Multiplies each coefficient by mu(|m|). The profile is evaluated once per
/// distinct squared magnitude (exact integer key), then broadcast.
SpectralField apply_radial_multiplier(const SpectralField& F,
                                      const std::function<double(double)>& mu);

/// General (possibly non-radial) real symbol evaluated on the integer
/// frequency vector; used by cube-body averages.
SpectralField apply_symbol(const SpectralField& F,
                           const std::function<double(const std::array<int, 3>&)>& symbol);

/// Convenience: inverse(mu applied to forward(f)).
SampledField filter_field(const SampledField& f, const std::function<double(double)>& mu);

} // namespace ballave
