#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qdist/classical.hpp"
#include "qdist/divergence.hpp"
#include "qdist/prob_vec.hpp"
#include "qdist/pure_state.hpp"
#include "qdist/rng.hpp"

namespace qdist {

/// Measurement-induced distribution p_i = |<b_i|s>|^2. The result sums to 1
/// by completeness of the basis.
ProbVec measurement_probabilities(const PureState& s,
                                  const MeasurementBasis& basis);

/// |<s1|s2>| clamped to [0, 1].
double overlap(const PureState& s1, const PureState& s2);

/// Largest statistical angle any measurement can induce: arccos(overlap).
double wootters_hilbert_max(const PureState& s1, const PureState& s2);

/// Largest induced squared Hellinger distance: 1 - overlap.
double hellinger_hilbert_max_sq(const PureState& s1, const PureState& s2);

/// Largest induced Bhattacharyya distance: -ln overlap; infinite flag when
/// the states are orthogonal.
DivergenceValue bhattacharyya_hilbert_max(const PureState& s1,
                                          const PureState& s2);

/// The selected classical distance evaluated on the two measurement-induced
/// distributions.
DivergenceValue induced_distance(DistanceKind kind,
                                 const MeasurementBasis& basis,
                                 const PureState& s1, const PureState& s2);

struct SearchBudget {
    std::size_t grid_theta = 96;   // coarse grid in the basis phase angle
    std::size_t grid_eta = 48;     // coarse grid in the amplitude-split angle
    std::size_t refine_rounds = 60;
    double value_tolerance = 1e-13;
};

struct MaximizeResult {
    DivergenceValue value;
    MeasurementBasis basis;
    double theta;  // basis parameters attaining the maximum
    double eta;
};

/// Numerically maximizes the induced distance over all two-outcome bases.
/// Bases are parameterized as v1 = (e^{i theta} cos eta, e^{-i theta} sin eta),
/// v2 = (-e^{i theta} sin eta, e^{-i theta} cos eta), which reaches every
/// pair of induced distributions (the one-parameter rotated family is the
/// slice eta = pi/4 and cannot leave the uniform distribution when the states
/// are coordinate-aligned). Coarse grid scanned in ascending theta (ties
/// broken toward the smallest theta) followed by alternating golden-section
/// refinement. Only dimension 2 is supported.
MaximizeResult maximize_induced_distance(DistanceKind kind,
                                         const PureState& s1,
                                         const PureState& s2,
                                         const SearchBudget& budget = {});

/// Geodesic angle on the ray space: 2 arccos(|<a|b>| / (|a| |b|)) in [0, pi].
/// Inputs need not be normalized; the formula divides by the norms, so the
/// result is invariant under scaling either argument by any nonzero complex
/// number.
double fubini_study_angle(const std::vector<std::complex<double>>& a,
                          const std::vector<std::complex<double>>& b);
double fubini_study_angle(const PureState& a, const PureState& b);

/// Distribution induced on a 2D state by the rotated basis at angle theta,
/// computed from the closed form
///   p1(theta) = (p1 + p2)/2 + sqrt(p1 p2) cos(2 theta + alpha2 - alpha1)
/// where p_k = |a_k|^2 and alpha_k = arg(a_k) (with arg(0) := 0). Agrees with
/// measurement_probabilities(s, RotatedBasis2D(theta).basis()) to roundoff.
ProbVec rotated_probabilities_2d(const PureState& s, double theta);

/// JSD between the rotated-basis-induced distributions of the reference pair
/// |s1> = (1, 0) and |s2> = (cos phi, sin phi). Requires phi in [0, pi/2]
/// and theta in [0, 2 pi].
DivergenceValue rotated_jsd_2d(double phi, double theta);

/// Approximately Haar-distributed state: normalized complex Gaussian
/// amplitudes. Deterministic for a fixed generator state. Requires n >= 2.
PureState random_pure_state(std::size_t n, Rng& rng);
PureState random_pure_state(std::size_t n, std::uint64_t seed);

/// Haar-random orthonormal basis via Gram-Schmidt on Gaussian vectors.
MeasurementBasis random_basis(std::size_t n, Rng& rng);

}  // namespace qdist
