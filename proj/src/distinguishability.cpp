#include "qdist/distinguishability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "qdist/classical.hpp"
#include "qdist/rng.hpp"

namespace qdist {

namespace {

void require_positive_trials(std::uint64_t L) {
    if (L == 0)
        throw std::invalid_argument("trial count L must be a positive integer");
}

// Smallest L with fires(L) true, starting from a closed-form candidate and
// scanning the boundary with the criterion's own floating-point comparison,
// so the minimality property holds exactly as tested.
template <typename Fires>
std::optional<std::uint64_t> min_trials_from_candidate(double candidate_real,
                                                       Fires fires) {
    if (!(candidate_real < 9.0e18))
        return std::nullopt;  // beyond representable trial counts
    std::uint64_t cand = static_cast<std::uint64_t>(candidate_real) + 1;
    if (cand < 1) cand = 1;
    while (cand > 1 && fires(cand - 1)) --cand;
    while (!fires(cand)) ++cand;
    return cand;
}

}  // namespace

CriterionVerdict wootters_criterion(const ProbVec& p1, const ProbVec& p2,
                                    std::uint64_t L) {
    require_positive_trials(L);
    // chi2_half_distance supplies (1/2) sqrt(sum dp^2 / p1) and the
    // singular-denominator error.
    double c = chi2_half_distance(p1, p2).value();
    double statistic = std::sqrt(static_cast<double>(L)) * c;
    const double threshold = 1.0;
    auto fires = [c](std::uint64_t l) {
        return std::sqrt(static_cast<double>(l)) * c > 1.0;
    };
    std::optional<std::uint64_t> min_trials;
    if (c > 0.0)
        min_trials = min_trials_from_candidate(std::floor(1.0 / (c * c)), fires);
    return CriterionVerdict{statistic > threshold, statistic, threshold,
                            min_trials};
}

CriterionVerdict jsd_criterion(const ProbVec& p1, const ProbVec& p2,
                               std::uint64_t L) {
    require_positive_trials(L);
    double j = jsd(p1, p2).value();
    double statistic = std::sqrt(j);
    double threshold = 1.0 / std::sqrt(2.0 * static_cast<double>(L));
    auto fires = [j](std::uint64_t l) {
        return std::sqrt(j) > 1.0 / std::sqrt(2.0 * static_cast<double>(l));
    };
    std::optional<std::uint64_t> min_trials;
    if (j > 0.0)
        min_trials = min_trials_from_candidate(std::floor(1.0 / (2.0 * j)),
                                               fires);
    return CriterionVerdict{statistic > threshold, statistic, threshold,
                            min_trials};
}

SweepTable criteria_agreement_profile(const ProbVec& p1,
                                      const std::vector<double>& direction,
                                      const std::vector<double>& separations) {
    if (direction.size() != p1.size())
        throw std::invalid_argument(
            "criteria_agreement_profile: direction dimension mismatch");
    double dir_sum = 0.0, dir_norm = 0.0;
    for (double d : direction) {
        dir_sum += d;
        dir_norm += d * d;
    }
    if (!(dir_norm > 0.0) || std::abs(dir_sum) > 1e-12 * std::sqrt(dir_norm))
        throw std::invalid_argument(
            "criteria_agreement_profile: direction must be nonzero and sum to "
            "0");
    for (double x : p1)
        if (!(x > 0.0))
            throw std::domain_error(
                "criteria_agreement_profile: p1 must be strictly interior");

    const double inf = std::numeric_limits<double>::infinity();
    SweepTable table(
        {"separation", "min_trials_wootters", "min_trials_jsd", "ratio"});
    for (double sep : separations) {
        std::vector<double> q(p1.size());
        for (std::size_t i = 0; i < p1.size(); ++i) {
            q[i] = p1[i] + sep * direction[i];
            if (q[i] < -1e-12 || q[i] > 1.0 + 1e-12)
                throw std::domain_error(
                    "criteria_agreement_profile: perturbation exits the "
                    "simplex at separation " + std::to_string(sep));
            q[i] = std::clamp(q[i], 0.0, 1.0);
        }
        ProbVec p2(std::move(q));
        auto w = wootters_criterion(p1, p2, 1);
        auto jn = jsd_criterion(p1, p2, 1);
        double mw = w.min_trials ? static_cast<double>(*w.min_trials) : inf;
        double mj = jn.min_trials ? static_cast<double>(*jn.min_trials) : inf;
        // Both infinite (zero separation): the ratio is undefined and is
        // flagged infinite as well.
        double ratio = (w.min_trials && jn.min_trials) ? mj / mw : inf;
        table.add_row({sep, mw, mj, ratio});
    }
    return table;
}

double monte_carlo_discrimination(const ProbVec& p1, const ProbVec& p2,
                                  std::uint64_t L, std::uint64_t experiments,
                                  std::uint64_t seed) {
    require_same_dimension(p1, p2);
    require_positive_trials(L);
    if (experiments == 0)
        throw std::invalid_argument("experiment count must be positive");

    const std::size_t n = p1.size();
    std::vector<double> cum1(n), cum2(n);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) cum1[i] = (acc += p1[i]);
    acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) cum2[i] = (acc += p2[i]);
    cum1[n - 1] = cum2[n - 1] = 1.0;  // guard the top against roundoff

    std::vector<double> log1(n), log2(n);
    const double neg_inf = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        log1[i] = p1[i] > 0.0 ? std::log(p1[i]) : neg_inf;
        log2[i] = p2[i] > 0.0 ? std::log(p2[i]) : neg_inf;
    }

    std::uint64_t correct = 0;
    std::vector<std::uint64_t> counts(n);
    for (std::uint64_t e = 0; e < experiments; ++e) {
        Rng rng(Rng::substream_seed(seed, e));
        bool from_first = rng.uniform() < 0.5;
        const std::vector<double>& cum = from_first ? cum1 : cum2;
        std::fill(counts.begin(), counts.end(), 0);
        for (std::uint64_t t = 0; t < L; ++t) {
            double u = rng.uniform();
            std::size_t k = 0;
            while (k + 1 < n && u >= cum[k]) ++k;
            ++counts[k];
        }
        double ll1 = 0.0, ll2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (counts[i] == 0) continue;
            ll1 += static_cast<double>(counts[i]) * log1[i];
            ll2 += static_cast<double>(counts[i]) * log2[i];
        }
        bool choose_first = ll1 >= ll2;  // tie -> p1
        if (choose_first == from_first) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(experiments);
}

}  // namespace qdist
