#pragma once

#include <limits>
#include <stdexcept>

namespace qdist {

/// Nonnegative divergence/distance value in nats (or radians for angular
/// distances), with an explicit infinite flag for divergences that are not
/// always well defined (Kullback-Leibler on mismatched supports, -ln B when
/// the Bhattacharyya coefficient vanishes).
class DivergenceValue {
public:
    static DivergenceValue finite(double v) {
        if (!(v >= 0.0) || v == std::numeric_limits<double>::infinity())
            throw std::invalid_argument(
                "DivergenceValue::finite requires a finite nonnegative value");
        return DivergenceValue(v);
    }

    static DivergenceValue infinity() {
        return DivergenceValue(std::numeric_limits<double>::infinity());
    }

    bool is_infinite() const {
        return value_ == std::numeric_limits<double>::infinity();
    }

    /// Numeric value; +inf when the infinite flag is set.
    double value() const { return value_; }

private:
    explicit DivergenceValue(double v) : value_(v) {}
    double value_;
};

}  // namespace qdist
