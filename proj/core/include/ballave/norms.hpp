#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ballave/averaging.hpp"
#include "ballave/field.hpp"
#include "ballave/filter_bank.hpp"

namespace ballave {

/// Truncation of the dyadic scale sum. Ball-method norms need
/// l * 2^{-k_min} * outer < pi (the body embeds in the torus) and every norm
/// needs k_max <= log2(N/2); scales beyond Nyquist only alias noise.
struct ScaleRange {
    int k_min = 0;
    int k_max = 0;
};

enum class Space { besov, triebel_lizorkin };
enum class Method { classical, ball };

struct NormParams {
    Space space = Space::besov;
    bool homogeneous = true;
    double alpha = 1.0; // in (0, 2l) for the ball method
    double p = 2.0;     // (1, inf]
    double q = 2.0;     // (0, inf] Besov, (1, inf] Triebel-Lizorkin
    int ell = 1;
    Method method = Method::ball;
    std::optional<ScaleRange> range; // defaulted from the grid when absent
    BodySpec body{BodyKind::euclidean_ball, 1};
    int center_stride = 1; // p = inf sup over ball centers; 1 = every grid point
};

struct ScaleEntry {
    int k;
    double value; // 2^{k alpha} || piece_k ||_p  (diagnostic summand)
};

struct NormReport {
    NormParams params;
    std::vector<ScaleEntry> per_scale;
    double lp_term = 0.0; // ||f||_p when the definition adds it, else 0
    double aggregate = 0.0;
    std::vector<int> excluded_ball_scales; // p=inf radii below 4 grid cells
};

/// k_min from the embedding constraint (ball) or the lowest populated band
/// (classical); k_max = log2(N/2) - 2.
ScaleRange default_scale_range(const NormParams& params, const GridSpec& grid);

/// Enforces the parameter domain; throws std::invalid_argument.
void validate_norm_params(const NormParams& params, const GridSpec& grid);

/// (sum v_i^q)^{1/q}, max for q = inf; values must be nonnegative.
double lq_aggregate(std::span<const double> values, double q);

NormReport besov_norm(const SampledField& f, NormParams params, const FilterBank& bank);
NormReport tl_norm(const SampledField& f, NormParams params, const FilterBank& bank);

/// Dispatch on params.space.
NormReport compute_norm(const SampledField& f, const NormParams& params, const FilterBank& bank);

/// Mean of the field over the periodic ball of radius r at every grid point.
/// Radii that cover the torus degrade to the global mean.
std::vector<double> periodic_ball_mean(const GridSpec& grid, const std::vector<double>& v,
                                       double radius);

/// Hardy-Littlewood maximal function over a dyadic radius set (plus the
/// point's own cell, so Mf >= |f| pointwise).
SampledField hl_maximal(const SampledField& f);

/// Per scale j, the smallest C_j with |phi_j * f| <= C_j M(f - B_{l,2^{-j}}f)
/// pointwise; sites where the maximal function vanishes are excluded and
/// counted.
struct MaximalControlReport {
    std::vector<ScaleEntry> per_scale; // (j, C_j)
    double max_constant = 0.0;
    std::size_t excluded_sites = 0;
};
MaximalControlReport maximal_control_check(const SampledField& f, int ell, const FilterBank& bank,
                                           std::span<const int> scales);

/// Finitely supported two-sided sequence a_k, k = first_k .. first_k+len-1.
struct DyadicSequence {
    int first_k = 0;
    std::vector<double> values;
};

/// Both discrete Hardy inequalities at weight beta and exponent q:
///   tail: sum_k 2^{k beta q} (sum_{j>=k} |a_j|)^q  vs  sum_k 2^{k beta q}|a_k|^q
///   head: the mirror with 2^{-k beta q} and partial sums from below.
/// The infinite geometric parts are summed in closed form.
struct HardyReport {
    double lhs_tail = 0.0, rhs_tail = 0.0, ratio_tail = 0.0;
    double lhs_head = 0.0, rhs_head = 0.0, ratio_head = 0.0;
};
HardyReport discrete_hardy_check(const DyadicSequence& a, double beta, double q);

} // namespace ballave
