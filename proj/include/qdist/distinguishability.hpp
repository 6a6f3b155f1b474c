#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qdist/prob_vec.hpp"
#include "qdist/sweep_table.hpp"

namespace qdist {

/// Outcome of a distinguishability criterion at L trials.
/// distinguishable <=> statistic > threshold. min_trials is the smallest L
/// for which the criterion fires, or nullopt (the infinite flag) when no L
/// suffices (identical distributions) or the count exceeds 2^63.
struct CriterionVerdict {
    bool distinguishable;
    double statistic;
    double threshold;
    std::optional<std::uint64_t> min_trials;
};

/// One-standard-deviation separation criterion: statistic
/// (sqrt(L)/2) sqrt(sum (p1_i - p2_i)^2 / p1_i) against threshold 1.
/// Asymmetric: the chi-square denominators come from p1. Throws
/// std::domain_error when p1_i = 0 while p2_i != 0.
CriterionVerdict wootters_criterion(const ProbVec& p1, const ProbVec& p2,
                                    std::uint64_t L);

/// Entropic criterion: statistic sqrt(jsd(p1, p2)) against threshold
/// 1/sqrt(2L). Symmetric and well defined for every pair, including disjoint
/// supports.
CriterionVerdict jsd_criterion(const ProbVec& p1, const ProbVec& p2,
                               std::uint64_t L);

/// Table (separation, min_trials_wootters, min_trials_jsd, ratio) for
/// p2 = p1 + separation * direction. The two criteria agree as the
/// separation shrinks (ratio -> 1). A zero separation yields the infinite
/// flag in all three result columns. The direction must sum to zero;
/// perturbations must stay inside the simplex.
SweepTable criteria_agreement_profile(const ProbVec& p1,
                                      const std::vector<double>& direction,
                                      const std::vector<double>& separations);

/// Monte-Carlo discrimination experiment: each run picks the source (p1 or
/// p2) by a fair coin, draws L i.i.d. outcomes, and applies maximum-
/// likelihood discrimination with ties resolved toward p1. Returns the
/// fraction of correct identifications. Batches derive order-insensitive
/// substreams from (seed, experiment index), so the result depends only on
/// the arguments.
double monte_carlo_discrimination(const ProbVec& p1, const ProbVec& p2,
                                  std::uint64_t L, std::uint64_t experiments,
                                  std::uint64_t seed);

}  // namespace qdist
