#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ballave/quadrature.hpp"

namespace ballave {

/// Binomial coefficient as a double (exact for the small orders used here).
double binomial(int n, int k);

/// x^n for integer n >= 0.
double ipow(double x, int n);

/// Signed weights c_j, j = 1..ell, of the 2l-th order average
///   B_{l,t} = sum_j c_j B_{jt},  c_j = -2/C(2l,l) * (-1)^j C(2l,l-j).
/// They sum to 1, so constants are reproduced.
std::vector<double> average_weights(int ell);

/// gamma_n = [ int_0^1 (1-u^2)^{(n-1)/2} du ]^{-1}; closed form (1, 4/pi, 3/2).
double gamma_n(int dim);

/// Same constant evaluated through the quadrature path, for cross-checking.
double gamma_n_quadrature(int dim, const QuadratureRule& rule);

/// Normalized indicator transform of the unit ball,
///   gamma_n int_0^1 cos(u s) (1-u^2)^{(n-1)/2} du.
/// For dim=2 the singular weight is removed by the substitution u = sin(theta)
/// before the rule is applied. Radii s > 50 require node_count >= s.
double ball_hat(int dim, double s, const QuadratureRule& rule);

/// Difference multiplier
///   A_l(s) = gamma_n 4^l / C(2l,l) int_0^1 (1-u^2)^{(n-1)/2} sin(us/2)^{2l} du,
/// nonnegative, exactly 0 at s=0, vanishing to order 2l at the origin.
double a_ell(int ell, int dim, double s, const QuadratureRule& rule);

/// Average multiplier as the signed binomial combination of ball_hat(j s);
/// satisfies m_l(s) = 1 - A_l(s).
double m_ell(int ell, int dim, double s, const QuadratureRule& rule);

/// lim_{s->0} A_l(s)/s^{2l} = gamma_n/C(2l,l) int_0^1 u^{2l}(1-u^2)^{(n-1)/2} du.
double a_ell_small_s_limit(int ell, int dim, const QuadratureRule& rule);

/// Adaptive evaluations used by the spectral pipeline: composite panels of the
/// 64-node rule sized to the integrand frequency, memoized per exact radius.
double ball_hat_auto(int dim, double s);
double a_ell_auto(int ell, int dim, double s);
double m_ell_auto(int ell, int dim, double s);

/// | 4^l sin(s/2)^{2l} - [ C(2l,l) + 2 sum_j (-1)^j C(2l,l-j) cos(js) ] |
double trig_identity_residual(int ell, double s);

/// Empirical bracket of A_l(s)/s^{2l} over an interval (dense sampling plus the
/// analytic s->0 limit when the interval starts at 0; not interval arithmetic).
struct BoundEstimate {
    double s_lo = 0.0, s_hi = 0.0;
    int sample_count = 0;
    double c1_hat = 0.0, c2_hat = 0.0;
    double argmin = 0.0, argmax = 0.0;
};
BoundEstimate certify_ratio_bounds(int ell, int dim, double s_lo, double s_hi, int samples,
                                   const QuadratureRule& rule);

/// Symmetric convex averaging body: the Euclidean unit ball or the unit cube
/// [-1,1]^n (the l^inf ball). Sandwich radii delta1, delta2 are recorded so
/// B(0,delta1) subset K subset B(0,delta2).
enum class BodyKind { euclidean_ball, cube };
struct BodySpec {
    BodyKind kind = BodyKind::euclidean_ball;
    int dim = 1;
    double inner_radius() const { return 1.0; }
    double outer_radius() const;
};

/// Normalized indicator transform of the body: |K|^{-1} int_K exp(-i x.u) du.
/// Ball -> ball_hat(|x|); cube -> prod_a sin(x_a)/x_a.
double body_hat(const BodySpec& body, std::span<const double> x);

/// A_{l,K}(x) = 4^l/C(2l,l) |K|^{-1} int_K sin(x.u/2)^{2l} du by tensor
/// Gauss-Legendre over the cube; the ball delegates to a_ell of |x|.
double a_ell_body(int ell, const BodySpec& body, std::span<const double> x,
                  const QuadratureRule& rule);

/// m_{l,K}(x) = sum_j c_j body_hat(j x) = 1 - A_{l,K}(x).
double m_ell_body(int ell, const BodySpec& body, std::span<const double> x);

/// Direction-by-radius sweep of the body ratio A_{l,K}(x)/|x|^{2l} together
/// with a finite-difference check of |grad A_{l,K}| <= C min(|x|^{2l-1}, 1).
struct BodyCheckReport {
    double ratio_min = 0.0, ratio_max = 0.0;
    double argmin_radius = 0.0, argmax_radius = 0.0;
    double grad_constant = 0.0;      // empirical C at step h
    double grad_constant_half = 0.0; // at step h/2
    int directions = 0;
    int radii = 0;
};
/// gradient_stride thins the finite-difference sweep (the ratio sweep always
/// visits every point).
BodyCheckReport body_ratio_and_derivative_check(int ell, const BodySpec& body,
                                                std::span<const double> radii, int directions,
                                                const QuadratureRule& rule,
                                                double fd_step = 1e-3, int gradient_stride = 1);

/// Tabulated radial multiplier with quadrature provenance; the profile keys
/// lookups by the exact tabulated radius.
enum class TableKind { ball_hat, a_ell, m_ell, eta, a_ell_ratio };
std::string table_kind_name(TableKind kind);

struct RadialMultiplierTable {
    TableKind kind = TableKind::ball_hat;
    int ell = 1;
    int dim = 1;
    double gamma = 1.0;
    int rule_nodes = 0;
    std::vector<std::pair<double, double>> entries; // (radius, value), radius ascending

    /// Exact-radius lookup; throws std::domain_error for radii not tabulated.
    std::function<double(double)> profile() const;
};

/// Builds ball_hat / a_ell / m_ell / a_ell_ratio tables (eta tables need a
/// filter bank and are built there). Checks the table invariants:
/// ball_hat(0)=1, A(0)=0, A>=0, |m - (1-A)| <= 1e-10 at every radius.
RadialMultiplierTable build_multiplier_table(TableKind kind, int ell, int dim,
                                             std::span<const double> radii,
                                             const QuadratureRule& rule);

} // namespace ballave
