#include "qdist/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace qdist {

namespace {

constexpr double kPi = std::numbers::pi;

void require_dimension_2(const PureState& s1, const PureState& s2,
                         const char* what) {
    if (s1.size() != 2 || s2.size() != 2)
        throw std::domain_error(std::string(what) +
                                ": only dimension 2 is supported");
}

// Basis v1 = (e^{i th} cos eta, e^{-i th} sin eta),
//       v2 = (-e^{i th} sin eta, e^{-i th} cos eta); orthonormal for all
// (theta, eta), and every pair of induced distributions on 2D states is
// reached by some (theta, eta) since probabilities only see the relative
// phase 2*theta and the magnitude split eta.
MeasurementBasis basis_from_params(double theta, double eta) {
    std::complex<double> ep(std::cos(theta), std::sin(theta));
    std::complex<double> em = std::conj(ep);
    double c = std::cos(eta), s = std::sin(eta);
    PureState v1({ep * c, em * s});
    PureState v2({-ep * s, em * c});
    return MeasurementBasis({v1, v2});
}

// One golden-section maximization pass over [lo, hi]; returns the argmax.
// Deterministic; ~1e-10 bracket shrink at 48 iterations.
double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  int iterations) {
    const double inv_phi = 0.6180339887498948482;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iterations; ++i) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    return f1 >= f2 ? x1 : x2;
}

}  // namespace

ProbVec measurement_probabilities(const PureState& s,
                                  const MeasurementBasis& basis) {
    if (s.size() != basis.size())
        throw std::invalid_argument(
            "measurement_probabilities: dimension mismatch");
    std::vector<double> p(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        p[i] = std::norm(inner_product(basis[i], s));
    return ProbVec(std::move(p));
}

double overlap(const PureState& s1, const PureState& s2) {
    return std::clamp(std::abs(inner_product(s1, s2)), 0.0, 1.0);
}

double wootters_hilbert_max(const PureState& s1, const PureState& s2) {
    return std::acos(overlap(s1, s2));
}

double hellinger_hilbert_max_sq(const PureState& s1, const PureState& s2) {
    return 1.0 - overlap(s1, s2);
}

DivergenceValue bhattacharyya_hilbert_max(const PureState& s1,
                                          const PureState& s2) {
    double c = overlap(s1, s2);
    if (c == 0.0) return DivergenceValue::infinity();
    return DivergenceValue::finite(std::max(-std::log(c), 0.0));
}

DivergenceValue induced_distance(DistanceKind kind,
                                 const MeasurementBasis& basis,
                                 const PureState& s1, const PureState& s2) {
    ProbVec p = measurement_probabilities(s1, basis);
    ProbVec q = measurement_probabilities(s2, basis);
    return classical_distance(kind, p, q);
}

MaximizeResult maximize_induced_distance(DistanceKind kind,
                                         const PureState& s1,
                                         const PureState& s2,
                                         const SearchBudget& budget) {
    require_dimension_2(s1, s2, "maximize_induced_distance");
    if (budget.grid_theta < 2 || budget.grid_eta < 2)
        throw std::invalid_argument(
            "maximize_induced_distance: grid must have at least 2 points per "
            "axis");

    auto objective = [&](double theta, double eta) {
        return induced_distance(kind, basis_from_params(theta, eta), s1, s2)
            .value();  // +inf for the infinite flag, which dominates correctly
    };

    // Probabilities are pi-periodic in theta; eta covers [0, pi/2].
    const double theta_cell = kPi / static_cast<double>(budget.grid_theta);
    const double eta_cell =
        (kPi / 2.0) / static_cast<double>(budget.grid_eta - 1);

    double best = -1.0, best_theta = 0.0, best_eta = 0.0;
    for (std::size_t i = 0; i < budget.grid_theta; ++i) {
        double theta = static_cast<double>(i) * theta_cell;
        for (std::size_t j = 0; j < budget.grid_eta; ++j) {
            double eta = static_cast<double>(j) * eta_cell;
            double v = objective(theta, eta);
            if (v > best) {  // strict: ties keep the smallest theta
                best = v;
                best_theta = theta;
                best_eta = eta;
            }
        }
    }

    // Alternating golden-section refinement around the best grid cell. A
    // candidate replaces the incumbent only when it improves it, so the
    // result never falls below the grid maximum (in particular an exact
    // divergence found on the grid is kept as is).
    for (std::size_t round = 0;
         round < budget.refine_rounds && !std::isinf(best); ++round) {
        double prev = best;
        double cand_theta = golden_max(
            [&](double t) { return objective(t, best_eta); },
            best_theta - theta_cell, best_theta + theta_cell, 48);
        double v = objective(cand_theta, best_eta);
        if (v > best) {
            best = v;
            best_theta = cand_theta;
        }
        double cand_eta = golden_max(
            [&](double e) { return objective(best_theta, e); },
            std::max(0.0, best_eta - eta_cell),
            std::min(kPi / 2.0, best_eta + eta_cell), 48);
        v = objective(best_theta, cand_eta);
        if (v > best) {
            best = v;
            best_eta = cand_eta;
        }
        if (std::isinf(best)) break;
        if (best - prev < budget.value_tolerance) break;
    }

    DivergenceValue value = std::isinf(best) ? DivergenceValue::infinity()
                                             : DivergenceValue::finite(
                                                   std::max(best, 0.0));
    return MaximizeResult{value, basis_from_params(best_theta, best_eta),
                          best_theta, best_eta};
}

double fubini_study_angle(const std::vector<std::complex<double>>& a,
                          const std::vector<std::complex<double>>& b) {
    if (a.size() != b.size() || a.empty())
        throw std::invalid_argument(
            "fubini_study_angle: inputs must share a nonzero dimension");
    double na = 0.0, nb = 0.0;
    std::complex<double> ip = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        na += std::norm(a[k]);
        nb += std::norm(b[k]);
        ip += std::conj(a[k]) * b[k];
    }
    if (!(na > 0.0) || !(nb > 0.0))
        throw std::invalid_argument(
            "fubini_study_angle: inputs must be nonzero vectors");
    double c = std::clamp(std::abs(ip) / std::sqrt(na * nb), 0.0, 1.0);
    return 2.0 * std::acos(c);
}

double fubini_study_angle(const PureState& a, const PureState& b) {
    return fubini_study_angle(a.amplitudes(), b.amplitudes());
}

ProbVec rotated_probabilities_2d(const PureState& s, double theta) {
    if (s.size() != 2)
        throw std::invalid_argument("rotated_probabilities_2d: state must be 2D");
    double p1 = std::norm(s[0]);
    double p2 = std::norm(s[1]);
    // arg(0) := 0 — the phase multiplies sqrt(p1 p2) = 0 exactly where it is
    // undefined.
    double a1 = (s[0] == std::complex<double>(0.0)) ? 0.0 : std::arg(s[0]);
    double a2 = (s[1] == std::complex<double>(0.0)) ? 0.0 : std::arg(s[1]);
    double mean = 0.5 * (p1 + p2);
    double osc = std::sqrt(p1 * p2) * std::cos(2.0 * theta + a2 - a1);
    double q1 = std::clamp(mean + osc, 0.0, 1.0);
    double q2 = std::clamp(mean - osc, 0.0, 1.0);
    return ProbVec({q1, q2});
}

DivergenceValue rotated_jsd_2d(double phi, double theta) {
    if (!(phi >= 0.0 && phi <= kPi / 2.0))
        throw std::domain_error("rotated_jsd_2d: phi must lie in [0, pi/2]");
    if (!(theta >= 0.0 && theta <= 2.0 * kPi))
        throw std::domain_error("rotated_jsd_2d: theta must lie in [0, 2 pi]");
    PureState s1({1.0, 0.0});
    PureState s2({std::cos(phi), std::sin(phi)});
    return jsd(rotated_probabilities_2d(s1, theta),
               rotated_probabilities_2d(s2, theta));
}

PureState random_pure_state(std::size_t n, Rng& rng) {
    if (n < 2)
        throw std::invalid_argument("random_pure_state requires n >= 2");
    for (;;) {
        std::vector<std::complex<double>> a(n);
        double norm_sq = 0.0;
        for (auto& x : a) {
            x = std::complex<double>(rng.normal(), rng.normal());
            norm_sq += std::norm(x);
        }
        if (norm_sq < 1e-280) continue;  // essentially impossible, retry
        double inv = 1.0 / std::sqrt(norm_sq);
        for (auto& x : a) x *= inv;
        return PureState(std::move(a));
    }
}

PureState random_pure_state(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    return random_pure_state(n, rng);
}

MeasurementBasis random_basis(std::size_t n, Rng& rng) {
    if (n < 2) throw std::invalid_argument("random_basis requires n >= 2");
    std::vector<std::vector<std::complex<double>>> vs;
    vs.reserve(n);
    while (vs.size() < n) {
        std::vector<std::complex<double>> v(n);
        for (auto& x : v) x = std::complex<double>(rng.normal(), rng.normal());
        // Classical Gram-Schmidt applied twice for numerical orthogonality.
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& u : vs) {
                std::complex<double> proj = 0.0;
                for (std::size_t k = 0; k < n; ++k)
                    proj += std::conj(u[k]) * v[k];
                for (std::size_t k = 0; k < n; ++k) v[k] -= proj * u[k];
            }
        }
        double norm_sq = 0.0;
        for (const auto& x : v) norm_sq += std::norm(x);
        if (norm_sq < 1e-12) continue;  // near-dependent draw, retry
        double inv = 1.0 / std::sqrt(norm_sq);
        for (auto& x : v) x *= inv;
        vs.push_back(std::move(v));
    }
    std::vector<PureState> states;
    states.reserve(n);
    for (auto& v : vs) states.emplace_back(std::move(v));
    return MeasurementBasis(std::move(states));
}

}  // namespace qdist
