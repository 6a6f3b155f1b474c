#include "qdist/properties.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "qdist/classical.hpp"
#include "qdist/hilbert.hpp"
#include "qdist/prob_vec.hpp"
#include "qdist/rng.hpp"

namespace qdist {

namespace {

// Margins below this are attributed to floating-point roundoff; a triangle
// violation only counts as found above it.
constexpr double kViolationThreshold = 1e-6;
constexpr double kFpSlack = 1e-10;

constexpr std::size_t kMinDim = 2;
constexpr std::size_t kMaxDim = 6;

const DistanceKind kAllKinds[] = {DistanceKind::wootters,
                                  DistanceKind::hellinger_sq,
                                  DistanceKind::bhattacharyya,
                                  DistanceKind::jsd};

double kind_upper_bound(DistanceKind kind) {
    switch (kind) {
        case DistanceKind::wootters:
            return std::numbers::pi / 2.0;
        case DistanceKind::hellinger_sq:
            return 1.0;
        case DistanceKind::bhattacharyya:
            return std::numeric_limits<double>::infinity();
        case DistanceKind::jsd:
            return std::numbers::ln2;
    }
    throw std::logic_error("unreachable");
}

}  // namespace

std::vector<PropertyResult> run_metric_suite(std::uint64_t seed,
                                             std::size_t samples_per_dim) {
    Rng rng(seed);
    double symmetry = 0.0;
    double self_dist = 0.0;
    double min_distinct = std::numeric_limits<double>::infinity();
    double range_excess = -std::numeric_limits<double>::infinity();
    double hellinger_identity = 0.0;
    double wootters_identity = 0.0;
    double jsd_triangle = -std::numeric_limits<double>::infinity();
    std::size_t total = 0;

    for (std::size_t n = kMinDim; n <= kMaxDim; ++n) {
        for (std::size_t s = 0; s < samples_per_dim; ++s) {
            ProbVec p = random_simplex(n, rng);
            ProbVec q = random_simplex(n, rng);
            ProbVec r = random_simplex(n, rng);
            ++total;

            for (DistanceKind kind : kAllKinds) {
                double dpq = classical_distance(kind, p, q).value();
                double dqp = classical_distance(kind, q, p).value();
                if (std::isfinite(dpq) && std::isfinite(dqp))
                    symmetry = std::max(symmetry, std::abs(dpq - dqp));
                self_dist =
                    std::max(self_dist, classical_distance(kind, p, p).value());
                if (std::isfinite(dpq)) {
                    range_excess = std::max(range_excess, -dpq);
                    range_excess =
                        std::max(range_excess, dpq - kind_upper_bound(kind));
                }
                if (kind == DistanceKind::wootters)
                    min_distinct = std::min(min_distinct, dpq);
            }

            double b = bhattacharyya_coefficient(p, q);
            hellinger_identity = std::max(
                hellinger_identity, std::abs(hellinger_sq(p, q).value() - (1.0 - b)));
            wootters_identity = std::max(
                wootters_identity,
                std::abs(wootters_classical(p, q).value() -
                         std::acos(std::min(b, 1.0))));

            double d12 = std::sqrt(jsd(p, q).value());
            double d23 = std::sqrt(jsd(q, r).value());
            double d13 = std::sqrt(jsd(p, r).value());
            jsd_triangle = std::max(jsd_triangle, d13 - d12 - d23);
        }
    }

    return {
        {"symmetry", total, symmetry, symmetry <= 1e-12},
        {"self_distance_zero", total, self_dist, self_dist <= kViolationThreshold},
        {"distinct_positive", total, -min_distinct, min_distinct > 0.0},
        {"range_bounds", total, range_excess, range_excess <= 1e-12},
        {"hellinger_bhattacharyya_identity", total, hellinger_identity,
         hellinger_identity <= 1e-12},
        {"wootters_arccos_identity", total, wootters_identity,
         wootters_identity <= 1e-12},
        {"sqrt_jsd_triangle", total, jsd_triangle,
         jsd_triangle <= kViolationThreshold},
    };
}

std::vector<PropertyResult> run_nonmetric_suite(std::uint64_t seed,
                                                std::size_t samples_per_dim) {
    Rng rng(seed);
    double wootters_best = -std::numeric_limits<double>::infinity();
    double bhat_best = -std::numeric_limits<double>::infinity();
    std::size_t total = 0;

    for (std::size_t n = kMinDim; n <= kMaxDim; ++n) {
        for (std::size_t s = 0; s < samples_per_dim; ++s) {
            ProbVec p = random_simplex(n, rng);
            ProbVec q = random_simplex(n, rng);
            ProbVec r = random_simplex(n, rng);
            ++total;

            wootters_best =
                std::max(wootters_best, wootters_classical(p, r).value() -
                                            wootters_classical(p, q).value() -
                                            wootters_classical(q, r).value());

            double b12 = bhattacharyya_distance(p, q).value();
            double b23 = bhattacharyya_distance(q, r).value();
            double b13 = bhattacharyya_distance(p, r).value();
            if (std::isfinite(b12) && std::isfinite(b23) && std::isfinite(b13))
                bhat_best = std::max(bhat_best, b13 - b12 - b23);
        }
    }

    return {
        {"wootters_triangle_violation", total, wootters_best,
         wootters_best > kViolationThreshold},
        {"bhattacharyya_triangle_violation", total, bhat_best,
         bhat_best > kViolationThreshold},
    };
}

std::vector<PropertyResult> run_kernel_suite(std::uint64_t seed,
                                             std::size_t samples) {
    Rng rng(seed);
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < samples; ++s) {
        std::size_t m = 2 + rng.below(7);   // 2..8 points
        std::size_t n = kMinDim + rng.below(kMaxDim - kMinDim + 1);
        std::vector<ProbVec> points;
        points.reserve(m);
        for (std::size_t i = 0; i < m; ++i)
            points.push_back(random_simplex(n, rng));
        std::vector<double> weights(m);
        double mean = 0.0;
        for (double& w : weights) mean += (w = rng.normal());
        mean /= static_cast<double>(m);
        for (double& w : weights) w -= mean;

        double quad = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                quad += 2.0 * weights[i] * weights[j] *
                        jsd(points[i], points[j]).value();
        worst = std::max(worst, quad);
    }
    return {{"jsd_kernel_negative", samples, worst, worst <= kFpSlack}};
}

std::vector<PropertyResult> run_chain_suite(std::uint64_t seed,
                                            std::size_t samples) {
    Rng rng(seed);
    double lower = -std::numeric_limits<double>::infinity();
    double upper = -std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < samples; ++s) {
        PureState s1 = random_pure_state(2, rng);
        PureState s2 = random_pure_state(2, rng);
        MeasurementBasis basis = random_basis(2, rng);
        ProbVec pa = measurement_probabilities(s1, basis);
        ProbVec pb = measurement_probabilities(s2, basis);
        double j = jsd(pa, pb).value();
        double w = wootters_classical(pa, pb).value();
        double cap = wootters_hilbert_max(s1, s2);
        // squared form of sqrt(2 jsd) <= w: near coinciding distributions
        // the square root amplifies roundoff past any reasonable slack
        lower = std::max(lower, 2.0 * j - w * w);
        upper = std::max(upper, w - cap);
    }
    return {
        {"chain_lower", samples, lower, lower <= kFpSlack},
        {"chain_upper", samples, upper, upper <= kFpSlack},
    };
}

std::vector<PropertyResult> run_desig_suite(std::uint64_t seed,
                                            std::size_t samples_per_dim) {
    Rng rng(seed);
    double worst = -std::numeric_limits<double>::infinity();
    std::size_t total = 0;
    for (std::size_t n = kMinDim; n <= kMaxDim; ++n) {
        for (std::size_t s = 0; s < samples_per_dim; ++s) {
            PureState s1 = random_pure_state(n, rng);
            PureState s2 = random_pure_state(n, rng);
            MeasurementBasis basis = random_basis(n, rng);
            ++total;
            double sum = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                sum += std::abs(inner_product(basis[i], s1)) *
                       std::abs(inner_product(basis[i], s2));
            worst = std::max(worst, overlap(s1, s2) - sum);
        }
    }
    return {{"amplitude_sum_dominates_overlap", total, worst,
             worst <= kFpSlack}};
}

std::vector<PropertyResult> run_property_suite(const std::string& suite,
                                               std::uint64_t seed) {
    if (suite == "metric") return run_metric_suite(seed);
    if (suite == "nonmetric") return run_nonmetric_suite(seed);
    if (suite == "kernel") return run_kernel_suite(seed);
    if (suite == "chain") return run_chain_suite(seed);
    if (suite == "desig") return run_desig_suite(seed);
    if (suite == "all") {
        std::vector<PropertyResult> all;
        for (const char* name : {"metric", "nonmetric", "kernel", "chain",
                                 "desig"}) {
            auto part = run_property_suite(name, seed);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    throw std::invalid_argument("unknown property suite: " + suite);
}

bool all_pass(const std::vector<PropertyResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const PropertyResult& r) { return r.pass; });
}

}  // namespace qdist
