#include "qdist/prob_vec.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qdist {

ProbVec::ProbVec(std::vector<double> values, double tolerance)
    : values_(std::move(values)) {
    if (values_.size() < 2)
        throw std::invalid_argument("ProbVec requires at least 2 outcomes, got " +
                                    std::to_string(values_.size()));
    double sum = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        double v = values_[i];
        if (!std::isfinite(v) || v < -tolerance || v > 1.0 + tolerance)
            throw std::invalid_argument(
                "ProbVec entry " + std::to_string(i) + " = " + std::to_string(v) +
                " outside [0, 1] beyond tolerance " + std::to_string(tolerance));
        sum += v;
    }
    if (std::abs(sum - 1.0) > tolerance)
        throw std::invalid_argument("ProbVec entries sum to " + std::to_string(sum) +
                                    ", not 1 within tolerance " +
                                    std::to_string(tolerance));
    // Absorb sub-tolerance roundoff to the boundary; this is not a
    // renormalization (the sum check above has already passed).
    for (double& v : values_) {
        if (v < 0.0) v = 0.0;
        if (v > 1.0) v = 1.0;
    }
}

ProbVec ProbVec::normalized(std::vector<double> weights) {
    double sum = 0.0;
    for (double w : weights) {
        if (!std::isfinite(w) || w < 0.0)
            throw std::invalid_argument(
                "ProbVec::normalized requires finite nonnegative weights");
        sum += w;
    }
    if (!(sum > 0.0))
        throw std::invalid_argument(
            "ProbVec::normalized requires a positive weight sum");
    for (double& w : weights) w /= sum;
    return ProbVec(std::move(weights));
}

void require_same_dimension(const ProbVec& p, const ProbVec& q) {
    if (p.size() != q.size())
        throw std::invalid_argument("dimension mismatch: " +
                                    std::to_string(p.size()) + " vs " +
                                    std::to_string(q.size()));
}

}  // namespace qdist
