#pragma once

#include <functional>
#include <vector>

#include "qdist/prob_vec.hpp"

namespace qdist {

/// Coefficients of dp^2, dp^3, dp^4 in a small-shift expansion of a binary
/// divergence f((p, 1-p), (p+dp, 1-p-dp)). Finite for p in (0, 1).
struct SeriesCoefficients {
    double c2;
    double c3;
    double c4;
};

/// Expansion of the Jensen-Shannon divergence:
///   c2 = -1 / (8 (p-1) p)
///   c3 = (2p - 1) / (16 p^2 (p-1)^2)
///   c4 = -(7/192) (3p^2 - 3p + 1) / (p^3 (p-1)^3)
/// Throws std::domain_error outside (0, 1).
SeriesCoefficients jsd_series_coeffs(double p);

/// Expansion of half the squared statistical angle, (1/2) W(p, p+dp)^2.
/// c2 and c3 coincide with the JSD expansion;
///   c4 = -(1/384) (44p^2 - 44p + 15) / (p^3 (p-1)^3).
/// The two expansions first differ at fourth order, by
/// (2p^2 - 2p + 1) / (384 p^3 (1-p)^3) — p-dependent, minimized at p = 1/2
/// where it equals 1/12.
SeriesCoefficients wootters_sq_half_series_coeffs(double p);

/// Log-log regression result of residual magnitude against dp.
struct OrderFit {
    double estimated_order;  // slope of ln|residual| vs ln dp
    double r_squared;        // in [0, 1]
    bool degenerate;  // every residual at machine epsilon; order reported as
                      // +infinity by convention (decay faster than any power)
};

/// Fits the decay order of |exact(dp) - series(dp)| over the given dp
/// sequence. Both callables take the scalar shift dp. Every dp must satisfy
/// 0 < dp < min(p, 1-p)/2, keeping (p + dp, 1 - p - dp) safely inside the
/// simplex; otherwise throws std::domain_error.
OrderFit verify_expansion_order(const std::function<double(double)>& exact,
                                const std::function<double(double)>& series,
                                double p, const std::vector<double>& dps);

/// Quadratic-form selectors for the infinitesimal limit
///   metric(p, p + dp) / sum(dp_i^2 / p_i).
/// Limits: jsd -> 1/8; fs_half_angle_sq -> 1/4 (the squared HALF Fubini-Study
/// angle, i.e. (theta_FS / 2)^2 through amplitudes sqrt(p_i));
/// wootters_sq_half -> 1/8; chi2_half_sq -> 1/4 (exact at any dp).
enum class RatioMetric { jsd, fs_half_angle_sq, wootters_sq_half, chi2_half_sq };

/// Evaluates metric(p, p + m * direction) / sum((m d_i)^2 / p_i) at each
/// magnitude m and returns the value at the smallest magnitude (the limit
/// estimate). The direction must sum to zero; p must be strictly interior
/// and every p + m * direction must remain interior.
double infinitesimal_ratio_check(RatioMetric metric, const ProbVec& p,
                                 const std::vector<double>& direction,
                                 const std::vector<double>& magnitudes);

struct FisherShiftResult {
    double jsd_value;  // discretized jsd(p(x), p(x + delta))
    double fisher;     // midpoint-rule integral of (p')^2 / p
    double ratio;      // jsd / (delta^2 fisher / 8); NaN when delta = 0
};

/// Verifies the small-shift relation jsd(p(x), p(x+delta)) ~ delta^2 I / 8
/// for a strictly positive density sampled on a uniform grid with the given
/// step. delta must be an integer multiple of the step; the boundary mass
/// (first plus last sample times step) must be below 1e-12.
FisherShiftResult fisher_shift_check(const std::vector<double>& density,
                                     double step, double delta);

}  // namespace qdist
