#pragma once

#include <functional>
#include <span>
#include <vector>

#include "ballave/field.hpp"
#include "ballave/fitting.hpp"
#include "ballave/multipliers.hpp"
#include "ballave/transform.hpp"

namespace ballave {

/// Parameters of the 2l-th order body average B_{l,t}. The largest
/// constituent body has radius l*t*outer_radius, which must stay below pi so
/// it embeds in the torus without wrap-around.
struct AverageSpec {
    int ell = 1;
    double t = 0.25;
    BodySpec body{BodyKind::euclidean_ball, 1};
};

/// Throws std::domain_error unless 0 < l*t*outer < pi.
void validate(const AverageSpec& spec, int grid_dim);

/// B_t f through the frequency side: multiplier body_hat(t m).
SampledField ball_average_spectral(const SampledField& f, double t,
                                   const BodySpec& body = {BodyKind::euclidean_ball, 1});

/// Independent spatial oracle: at each grid point the unweighted mean of
/// samples within periodic Euclidean distance t. Needs t >= 4 grid cells.
SampledField ball_average_spatial(const SampledField& f, double t);

/// B_{l,t} f as one multiplier pass with sum_j c_j body_hat(j t m).
SampledField higher_average(const SampledField& f, const AverageSpec& spec);

/// Same operator through the m_l = 1 - A_l route (ball body only); agrees
/// with higher_average to quadrature accuracy.
SampledField higher_average_via_mell(const SampledField& f, const AverageSpec& spec);

/// f - B_{l,t} f. For the ball this is one A_l(t|m|) multiplier pass; for the
/// cube it is 1 - m_{l,K}(t m).
SampledField ball_difference(const SampledField& f, const AverageSpec& spec);

/// Central difference of order r with step theta:
///   sum_{j=0..r} C(r,j) (-1)^j h(t + r*theta/2 - j*theta).
double central_difference(const std::function<double(double)>& h, int order, double step,
                          double at);

/// Residual of the identity
///   f(x) - B_{l,t} f(x) = (-1)^l / C(2l,l) * (D_t^{2l} g)(0),
/// with g the even radial extension g(s) = B_{|s|} f(x), g(0) = f(x).
/// Both sides are evaluated at the given probe grid points; returns the
/// largest |LHS - RHS|.
double verify_central_difference_identity(const SampledField& f, const AverageSpec& spec,
                                          std::span<const std::size_t> probes);

/// A continuum evaluation site on R^n (no periodicity): closed-form payloads
/// are averaged over balls/cubes by local Gauss-Legendre quadrature, which is
/// how polynomial reproduction is tested in its native habitat.
struct PointProbe {
    std::vector<double> center;
    int quadrature_order = 8; // per axis; must be >= ell + 4
    std::function<double(std::span<const double>)> payload;
};

/// B_{l,t}(payload)(center) by tensor/polar quadrature with the (1.7)-style
/// binomial weights.
double pointwise_body_average(const PointProbe& probe, const AverageSpec& spec);

/// Monomial reproduction: degrees <= 2l-1 are annihilated by f - B_{l,t}f;
/// degree 2l leaves a residual proportional to t^{2l}.
struct AnnihilationReport {
    int degree = 0;
    int ell = 0;
    int dim = 0;
    double reproduced_max_residual = 0.0; // over monomials of degree <= min(d, 2l-1)
    bool saturation_checked = false;      // degree reached 2l
    SlopeFit saturation_slope;            // log2 residual vs log2 t for x1^{2l}
    double saturation_min_residual = 0.0; // smallest deg-2l residual seen (must be > 0)
};
AnnihilationReport polynomial_reproduction_check(int degree, int ell, int dim,
                                                 std::span<const double> t_grid);

/// Fits log2 of max-over-probes |payload - B_{l,t} payload| against log2 t.
/// C^{2l} payloads give slope 2l; a kink caps the slope at 1.
SlopeFit taylor_decay_check(const std::function<double(std::span<const double>)>& payload,
                            int ell, int dim, std::span<const double> t_grid,
                            std::span<const std::vector<double>> probes,
                            int quadrature_order = 16);

} // namespace ballave
