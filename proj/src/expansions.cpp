#include "qdist/expansions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "qdist/classical.hpp"
#include "qdist/hilbert.hpp"

namespace qdist {

namespace {

void require_interior_p(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("series coefficients require p in (0, 1), got " +
                                std::to_string(p));
}

constexpr double kDegenerateResidual = 1e-14;

}  // namespace

SeriesCoefficients jsd_series_coeffs(double p) {
    require_interior_p(p);
    double q = p - 1.0;  // = -(1 - p)
    double c2 = -1.0 / (8.0 * q * p);
    double c3 = (2.0 * p - 1.0) / (16.0 * p * p * q * q);
    double c4 = -(7.0 / 192.0) * (3.0 * p * p - 3.0 * p + 1.0) /
                (p * p * p * q * q * q);
    return SeriesCoefficients{c2, c3, c4};
}

SeriesCoefficients wootters_sq_half_series_coeffs(double p) {
    require_interior_p(p);
    double q = p - 1.0;
    double c2 = -1.0 / (8.0 * q * p);
    double c3 = (2.0 * p - 1.0) / (16.0 * p * p * q * q);
    double c4 = -(1.0 / 384.0) * (44.0 * p * p - 44.0 * p + 15.0) /
                (p * p * p * q * q * q);
    return SeriesCoefficients{c2, c3, c4};
}

OrderFit verify_expansion_order(const std::function<double(double)>& exact,
                                const std::function<double(double)>& series,
                                double p, const std::vector<double>& dps) {
    require_interior_p(p);
    if (dps.size() < 3)
        throw std::invalid_argument(
            "verify_expansion_order needs at least 3 dp values");
    double half_margin = 0.5 * std::min(p, 1.0 - p);
    for (double dp : dps)
        if (!(dp > 0.0 && dp < half_margin))
            throw std::domain_error(
                "verify_expansion_order: dp = " + std::to_string(dp) +
                " leaves (0, min(p, 1-p)/2)");

    std::vector<double> residuals(dps.size());
    bool all_tiny = true;
    for (std::size_t i = 0; i < dps.size(); ++i) {
        residuals[i] = std::abs(exact(dps[i]) - series(dps[i]));
        if (residuals[i] >= kDegenerateResidual) all_tiny = false;
    }
    if (all_tiny)
        return OrderFit{std::numeric_limits<double>::infinity(), 1.0, true};

    // Least-squares slope of ln(residual) against ln(dp).
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    const double n = static_cast<double>(dps.size());
    for (std::size_t i = 0; i < dps.size(); ++i) {
        double x = std::log(dps[i]);
        double y = std::log(std::max(residuals[i], 1e-300));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
    }
    double cov = sxy - sx * sy / n;
    double var_x = sxx - sx * sx / n;
    double var_y = syy - sy * sy / n;
    double slope = cov / var_x;
    double r2 = (var_y > 0.0) ? std::clamp(cov * cov / (var_x * var_y), 0.0, 1.0)
                              : 1.0;
    return OrderFit{slope, r2, false};
}

double infinitesimal_ratio_check(RatioMetric metric, const ProbVec& p,
                                 const std::vector<double>& direction,
                                 const std::vector<double>& magnitudes) {
    if (direction.size() != p.size())
        throw std::invalid_argument(
            "infinitesimal_ratio_check: direction dimension mismatch");
    if (magnitudes.empty())
        throw std::invalid_argument(
            "infinitesimal_ratio_check: empty magnitude list");
    double dir_sum = 0.0, dir_norm = 0.0;
    for (double d : direction) {
        dir_sum += d;
        dir_norm += d * d;
    }
    if (!(dir_norm > 0.0) || std::abs(dir_sum) > 1e-12 * std::sqrt(dir_norm))
        throw std::invalid_argument(
            "infinitesimal_ratio_check: direction must be nonzero and sum to 0");
    for (double x : p)
        if (!(x > 0.0))
            throw std::domain_error(
                "infinitesimal_ratio_check: p must be strictly interior");

    auto shifted = [&](double m) {
        std::vector<double> q(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) {
            q[i] = p[i] + m * direction[i];
            if (!(q[i] > 0.0 && q[i] < 1.0))
                throw std::domain_error(
                    "infinitesimal_ratio_check: shifted point leaves the "
                    "interior at magnitude " + std::to_string(m));
        }
        return ProbVec(std::move(q));
    };

    auto metric_value = [&](const ProbVec& a, const ProbVec& b) {
        switch (metric) {
            case RatioMetric::jsd:
                return jsd(a, b).value();
            case RatioMetric::fs_half_angle_sq: {
                // Half the Fubini-Study angle between the amplitude maps
                // (sqrt a_i) and (sqrt b_i); its square tends to
                // (1/4) sum dp^2/p.
                std::vector<std::complex<double>> sa(a.size()), sb(b.size());
                for (std::size_t i = 0; i < a.size(); ++i) {
                    sa[i] = std::sqrt(a[i]);
                    sb[i] = std::sqrt(b[i]);
                }
                double half = 0.5 * fubini_study_angle(sa, sb);
                return half * half;
            }
            case RatioMetric::wootters_sq_half: {
                double w = wootters_classical(a, b).value();
                return 0.5 * w * w;
            }
            case RatioMetric::chi2_half_sq: {
                double c = chi2_half_distance(a, b).value();
                return c * c;
            }
        }
        throw std::invalid_argument("unknown RatioMetric");
    };

    double ratio_at_smallest = 0.0;
    double smallest = std::numeric_limits<double>::infinity();
    for (double m : magnitudes) {
        if (!(m > 0.0))
            throw std::invalid_argument(
                "infinitesimal_ratio_check: magnitudes must be positive");
        ProbVec q = shifted(m);
        double quad = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            double dp = m * direction[i];
            quad += dp * dp / p[i];
        }
        double ratio = metric_value(p, q) / quad;
        if (m < smallest) {
            smallest = m;
            ratio_at_smallest = ratio;
        }
    }
    return ratio_at_smallest;
}

FisherShiftResult fisher_shift_check(const std::vector<double>& density,
                                     double step, double delta) {
    if (density.size() < 5)
        throw std::invalid_argument("fisher_shift_check: grid too small");
    if (!(step > 0.0))
        throw std::invalid_argument("fisher_shift_check: step must be positive");
    for (double d : density)
        if (!(d > 0.0) || !std::isfinite(d))
            throw std::invalid_argument(
                "fisher_shift_check: density must be strictly positive");
    double boundary_mass = (density.front() + density.back()) * step;
    if (boundary_mass >= 1e-12)
        throw std::invalid_argument(
            "fisher_shift_check: excessive boundary mass " +
            std::to_string(boundary_mass) + "; widen the grid");
    double shift_steps = delta / step;
    long m = std::lround(shift_steps);
    if (std::abs(shift_steps - static_cast<double>(m)) > 1e-9 || m < 0)
        throw std::invalid_argument(
            "fisher_shift_check: delta must be a nonnegative integer multiple "
            "of the grid step");

    const std::size_t n = density.size();
    std::vector<double> pw(n), qw(n);
    for (std::size_t k = 0; k < n; ++k) {
        pw[k] = density[k] * step;
        // p(x_k + delta) = density[k + m]; the lost tail carries boundary-
        // scale mass only.
        qw[k] = (k + static_cast<std::size_t>(m) < n)
                    ? density[k + static_cast<std::size_t>(m)] * step
                    : 0.0;
    }
    ProbVec p = ProbVec::normalized(std::move(pw));
    ProbVec q = ProbVec::normalized(std::move(qw));
    double j = jsd(p, q).value();

    // Midpoint rule over interior points; central-difference derivative.
    double fisher = 0.0;
    for (std::size_t k = 1; k + 1 < n; ++k) {
        double deriv = (density[k + 1] - density[k - 1]) / (2.0 * step);
        fisher += deriv * deriv / density[k] * step;
    }

    double ratio = (delta > 0.0)
                       ? j / (delta * delta * fisher / 8.0)
                       : std::numeric_limits<double>::quiet_NaN();
    return FisherShiftResult{j, fisher, ratio};
}

}  // namespace qdist
