#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qdist/divergence.hpp"
#include "qdist/prob_vec.hpp"
#include "qdist/pure_state.hpp"

namespace qdist {

/// Hermitian, positive-semidefinite, unit-trace complex matrix. The spectrum
/// is computed at construction (Hermitian-specific solver) and cached; the
/// PSD check allows eigenvalues down to -1e-10.
class DensityMatrix {
public:
    static constexpr double kDefaultTolerance = 1e-9;
    static constexpr double kPsdTolerance = 1e-10;

    /// row-major entries of an n x n matrix.
    DensityMatrix(std::size_t n, std::vector<std::complex<double>> entries,
                  double tolerance = kDefaultTolerance);

    std::size_t size() const { return n_; }
    const std::complex<double>& entry(std::size_t i, std::size_t j) const {
        return entries_[i * n_ + j];
    }
    const std::vector<std::complex<double>>& entries() const {
        return entries_;
    }

    /// Real spectrum in ascending order, as computed at construction (not
    /// clipped).
    const std::vector<double>& eigenvalues() const { return eigenvalues_; }

    static DensityMatrix from_diagonal(const ProbVec& p);

private:
    std::size_t n_;
    std::vector<std::complex<double>> entries_;
    std::vector<double> eigenvalues_;
};

/// Rank-1 projector |s><s|.
DensityMatrix from_pure_state(const PureState& s);

/// Von Neumann entropy -sum lambda_k ln lambda_k over the spectrum, with
/// 0 ln 0 := 0; eigenvalues are clipped to [0, 1] after the PSD tolerance
/// check. Range [0, ln N].
double von_neumann_entropy(const DensityMatrix& rho);

/// Quantum Jensen-Shannon divergence
///   H((rho1 + rho2)/2) - H(rho1)/2 - H(rho2)/2
/// over von Neumann entropies. Always finite (unlike the Kullback-Leibler
/// divergence on mismatched supports), nonnegative, symmetric.
DivergenceValue quantum_jsd(const DensityMatrix& rho1,
                            const DensityMatrix& rho2);

}  // namespace qdist
