#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qdist {

/// Normalized complex vector representing a ray: equality is defined up to a
/// global phase, i.e. two states are equal iff |<a|b>| = 1 within tolerance.
class PureState {
public:
    static constexpr double kDefaultTolerance = 1e-9;

    explicit PureState(std::vector<std::complex<double>> amplitudes,
                       double tolerance = kDefaultTolerance);

    std::size_t size() const { return amps_.size(); }
    const std::complex<double>& operator[](std::size_t i) const {
        return amps_[i];
    }
    const std::vector<std::complex<double>>& amplitudes() const {
        return amps_;
    }

    /// Ray equality: | |<a|b>| - 1 | <= tolerance.
    static bool ray_equal(const PureState& a, const PureState& b,
                          double tolerance = kDefaultTolerance);

private:
    std::vector<std::complex<double>> amps_;
};

/// <a|b> = sum conj(a_k) b_k. Throws on dimension mismatch.
std::complex<double> inner_product(const PureState& a, const PureState& b);

/// Orthonormal set of N vectors in dimension N; the Gram matrix must deviate
/// from the identity by at most the tolerance entrywise.
class MeasurementBasis {
public:
    static constexpr double kDefaultTolerance = 1e-9;

    explicit MeasurementBasis(std::vector<PureState> vectors,
                              double tolerance = kDefaultTolerance);

    std::size_t size() const { return vectors_.size(); }
    const PureState& operator[](std::size_t i) const { return vectors_[i]; }
    const std::vector<PureState>& vectors() const { return vectors_; }

    /// Standard coordinate basis of dimension n.
    static MeasurementBasis standard(std::size_t n);

private:
    std::vector<PureState> vectors_;
};

/// One-parameter family of rotated two-outcome bases against the standard
/// coordinate basis {|1>, |2>}:
///   |b1> = (e^{i theta} |1> + e^{-i theta} |2>) / sqrt 2
///   |b2> = (e^{i theta} |1> - e^{-i theta} |2>) / sqrt 2
class RotatedBasis2D {
public:
    /// theta must lie in [0, 2 pi].
    explicit RotatedBasis2D(double theta);

    double theta() const { return theta_; }
    MeasurementBasis basis() const;

private:
    double theta_;
};

}  // namespace qdist
