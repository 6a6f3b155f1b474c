#pragma once

#include <cstddef>
#include <vector>

namespace qdist {

/// Element of the simplex X_N^+: N >= 2 probabilities, each in [0, 1] and
/// summing to 1, both within a validation tolerance. Entries that are
/// negative (or above 1) by no more than the tolerance are absorbed to the
/// boundary; validation never renormalizes — use ProbVec::normalized for an
/// explicit repair from nonnegative weights.
class ProbVec {
public:
    static constexpr double kDefaultTolerance = 1e-9;

    explicit ProbVec(std::vector<double> values,
                     double tolerance = kDefaultTolerance);

    /// Explicit normalization helper: divides nonnegative weights by their
    /// sum. Throws if any weight is negative or the sum is not positive.
    static ProbVec normalized(std::vector<double> weights);

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }

    std::vector<double>::const_iterator begin() const { return values_.begin(); }
    std::vector<double>::const_iterator end() const { return values_.end(); }

    bool operator==(const ProbVec& other) const {
        return values_ == other.values_;
    }

private:
    std::vector<double> values_;
};

/// Throws std::invalid_argument unless p and q have equal dimension.
void require_same_dimension(const ProbVec& p, const ProbVec& q);

}  // namespace qdist
