#pragma once

#include "qdist/divergence.hpp"
#include "qdist/prob_vec.hpp"

namespace qdist {

/// Shannon entropy H(p) = -sum p_i ln p_i in nats, with 0 ln 0 := 0.
/// Range [0, ln N].
double shannon_entropy(const ProbVec& p);

/// Kullback-Leibler divergence sum p_i ln(p_i / q_i); terms with p_i = 0
/// contribute 0. Returns the infinite flag when some q_i = 0 while p_i > 0.
DivergenceValue kl_divergence(const ProbVec& p, const ProbVec& q);

/// Jensen-Shannon divergence H((p+q)/2) - H(p)/2 - H(q)/2. Always finite,
/// symmetric, in [0, ln 2]; its square root is a metric.
DivergenceValue jsd(const ProbVec& p, const ProbVec& q);

/// Bhattacharyya coefficient B = sum sqrt(p_i q_i), clamped to [0, 1].
double bhattacharyya_coefficient(const ProbVec& p, const ProbVec& q);

/// Statistical angle arccos(B(p, q)) in [0, pi/2] radians.
DivergenceValue wootters_classical(const ProbVec& p, const ProbVec& q);

/// Squared Hellinger distance (1/2) sum (sqrt p_i - sqrt q_i)^2; equals
/// 1 - B(p, q) identically.
DivergenceValue hellinger_sq(const ProbVec& p, const ProbVec& q);

/// Bhattacharyya distance -ln B(p, q); infinite flag when B = 0.
DivergenceValue bhattacharyya_distance(const ProbVec& p, const ProbVec& q);

/// Half chi-square-form distance (1/2) sqrt(sum (p_i - q_i)^2 / p_i), summing
/// over i with p_i > 0. Asymmetric: denominators come from the first
/// argument. Throws std::domain_error if p_i = 0 while q_i != 0.
DivergenceValue chi2_half_distance(const ProbVec& p, const ProbVec& q);

/// Selector for the distances that have Hilbert-space analytic maxima.
enum class DistanceKind { wootters, hellinger_sq, bhattacharyya, jsd };

/// Dispatch on DistanceKind: wootters_classical, hellinger_sq,
/// bhattacharyya_distance, or jsd.
DivergenceValue classical_distance(DistanceKind kind, const ProbVec& p,
                                   const ProbVec& q);

const char* distance_kind_name(DistanceKind kind);

}  // namespace qdist
