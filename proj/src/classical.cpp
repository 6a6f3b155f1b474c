#include "qdist/classical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace qdist {

namespace {

// Entropy of raw probabilities (assumed valid); 0 ln 0 := 0 by continuity.
double entropy_raw(const std::vector<double>& v) {
    double h = 0.0;
    for (double x : v)
        if (x > 0.0) h -= x * std::log(x);
    return h;
}

}  // namespace

double shannon_entropy(const ProbVec& p) { return entropy_raw(p.values()); }

DivergenceValue kl_divergence(const ProbVec& p, const ProbVec& q) {
    require_same_dimension(p, q);
    double d = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0.0) continue;  // 0 ln(0/q) := 0
        if (q[i] <= 0.0) return DivergenceValue::infinity();
        d += p[i] * std::log(p[i] / q[i]);
    }
    return DivergenceValue::finite(std::max(d, 0.0));
}

DivergenceValue jsd(const ProbVec& p, const ProbVec& q) {
    require_same_dimension(p, q);
    std::vector<double> m(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) m[i] = 0.5 * (p[i] + q[i]);
    double v = entropy_raw(m) -
               0.5 * (entropy_raw(p.values()) + entropy_raw(q.values()));
    return DivergenceValue::finite(std::max(v, 0.0));
}

double bhattacharyya_coefficient(const ProbVec& p, const ProbVec& q) {
    require_same_dimension(p, q);
    double b = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) b += std::sqrt(p[i] * q[i]);
    return std::clamp(b, 0.0, 1.0);
}

DivergenceValue wootters_classical(const ProbVec& p, const ProbVec& q) {
    return DivergenceValue::finite(std::acos(bhattacharyya_coefficient(p, q)));
}

DivergenceValue hellinger_sq(const ProbVec& p, const ProbVec& q) {
    require_same_dimension(p, q);
    double h = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        double d = std::sqrt(p[i]) - std::sqrt(q[i]);
        h += d * d;
    }
    return DivergenceValue::finite(std::clamp(0.5 * h, 0.0, 1.0));
}

DivergenceValue bhattacharyya_distance(const ProbVec& p, const ProbVec& q) {
    double b = bhattacharyya_coefficient(p, q);
    if (b == 0.0) return DivergenceValue::infinity();
    return DivergenceValue::finite(std::max(-std::log(b), 0.0));
}

DivergenceValue chi2_half_distance(const ProbVec& p, const ProbVec& q) {
    require_same_dimension(p, q);
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        double d = p[i] - q[i];
        if (p[i] == 0.0) {
            if (q[i] != 0.0)
                throw std::domain_error(
                    "chi2_half_distance: singular denominator (p_i = 0 while "
                    "q_i != 0)");
            continue;
        }
        s += d * d / p[i];
    }
    return DivergenceValue::finite(0.5 * std::sqrt(s));
}

DivergenceValue classical_distance(DistanceKind kind, const ProbVec& p,
                                   const ProbVec& q) {
    switch (kind) {
        case DistanceKind::wootters: return wootters_classical(p, q);
        case DistanceKind::hellinger_sq: return hellinger_sq(p, q);
        case DistanceKind::bhattacharyya: return bhattacharyya_distance(p, q);
        case DistanceKind::jsd: return jsd(p, q);
    }
    throw std::invalid_argument("unknown DistanceKind");
}

const char* distance_kind_name(DistanceKind kind) {
    switch (kind) {
        case DistanceKind::wootters: return "wootters";
        case DistanceKind::hellinger_sq: return "hellinger_sq";
        case DistanceKind::bhattacharyya: return "bhattacharyya";
        case DistanceKind::jsd: return "jsd";
    }
    return "unknown";
}

}  // namespace qdist
