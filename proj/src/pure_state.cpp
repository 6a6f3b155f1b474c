#include "qdist/pure_state.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qdist {

PureState::PureState(std::vector<std::complex<double>> amplitudes,
                     double tolerance)
    : amps_(std::move(amplitudes)) {
    if (amps_.empty())
        throw std::invalid_argument("PureState requires a nonempty amplitude vector");
    double norm_sq = 0.0;
    for (const auto& a : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            throw std::invalid_argument("PureState amplitudes must be finite");
        norm_sq += std::norm(a);
    }
    if (std::abs(norm_sq - 1.0) > tolerance)
        throw std::invalid_argument(
            "PureState squared norm " + std::to_string(norm_sq) +
            " differs from 1 beyond tolerance " + std::to_string(tolerance));
}

bool PureState::ray_equal(const PureState& a, const PureState& b,
                          double tolerance) {
    if (a.size() != b.size()) return false;
    return std::abs(std::abs(inner_product(a, b)) - 1.0) <= tolerance;
}

std::complex<double> inner_product(const PureState& a, const PureState& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("inner_product: dimension mismatch: " +
                                    std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()));
    std::complex<double> s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += std::conj(a[k]) * b[k];
    return s;
}

MeasurementBasis::MeasurementBasis(std::vector<PureState> vectors,
                                   double tolerance)
    : vectors_(std::move(vectors)) {
    const std::size_t n = vectors_.size();
    if (n < 2)
        throw std::invalid_argument("MeasurementBasis requires at least 2 vectors");
    for (const auto& v : vectors_)
        if (v.size() != n)
            throw std::invalid_argument(
                "MeasurementBasis requires N vectors of dimension N (got "
                "dimension " + std::to_string(v.size()) + " with N = " +
                std::to_string(n) + ")");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            std::complex<double> g = inner_product(vectors_[i], vectors_[j]);
            double expected = (i == j) ? 1.0 : 0.0;
            if (std::abs(g - expected) > tolerance)
                throw std::invalid_argument(
                    "MeasurementBasis Gram matrix entry (" + std::to_string(i) +
                    ", " + std::to_string(j) + ") deviates from identity by " +
                    std::to_string(std::abs(g - expected)));
        }
}

MeasurementBasis MeasurementBasis::standard(std::size_t n) {
    std::vector<PureState> vs;
    vs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::complex<double>> a(n, 0.0);
        a[i] = 1.0;
        vs.emplace_back(std::move(a));
    }
    return MeasurementBasis(std::move(vs));
}

RotatedBasis2D::RotatedBasis2D(double theta) : theta_(theta) {
    if (!(theta >= 0.0 && theta <= 2.0 * std::numbers::pi))
        throw std::invalid_argument("RotatedBasis2D: theta must lie in [0, 2 pi]");
}

MeasurementBasis RotatedBasis2D::basis() const {
    const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
    std::complex<double> ep(std::cos(theta_), std::sin(theta_));    // e^{+i theta}
    std::complex<double> em(std::cos(theta_), -std::sin(theta_));   // e^{-i theta}
    PureState b1({ep * inv_sqrt2, em * inv_sqrt2});
    PureState b2({ep * inv_sqrt2, -em * inv_sqrt2});
    return MeasurementBasis({b1, b2});
}

}  // namespace qdist
