#include "qdist/density.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qdist {

namespace {

// Hermitian-specific spectrum (Householder tridiagonalization + QL), applied
// to the exactly-Hermitian average (A + A^dagger)/2 so sub-tolerance
// asymmetry cannot leak into the eigenvalues.
std::vector<double> hermitian_spectrum(
    std::size_t n, const std::vector<std::complex<double>>& entries) {
    Eigen::MatrixXcd m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::complex<double> sym =
                0.5 * (entries[i * n + j] + std::conj(entries[j * n + i]));
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = sym;
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("DensityMatrix: eigendecomposition failed");
    std::vector<double> ev(n);
    for (std::size_t k = 0; k < n; ++k)
        ev[k] = solver.eigenvalues()(static_cast<Eigen::Index>(k));
    std::sort(ev.begin(), ev.end());
    return ev;
}

}  // namespace

DensityMatrix::DensityMatrix(std::size_t n,
                             std::vector<std::complex<double>> entries,
                             double tolerance)
    : n_(n), entries_(std::move(entries)) {
    if (n_ < 2)
        throw std::invalid_argument("DensityMatrix requires dimension >= 2");
    if (entries_.size() != n_ * n_)
        throw std::invalid_argument(
            "DensityMatrix: expected " + std::to_string(n_ * n_) +
            " entries, got " + std::to_string(entries_.size()));
    for (const auto& e : entries_)
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag()))
            throw std::invalid_argument("DensityMatrix entries must be finite");

    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i; j < n_; ++j) {
            std::complex<double> d =
                entry(i, j) - std::conj(entry(j, i));
            if (std::abs(d) > tolerance)
                throw std::invalid_argument(
                    "DensityMatrix not Hermitian: entry (" + std::to_string(i) +
                    ", " + std::to_string(j) + ") deviates by " +
                    std::to_string(std::abs(d)));
        }

    std::complex<double> tr = 0.0;
    for (std::size_t i = 0; i < n_; ++i) tr += entry(i, i);
    if (std::abs(tr - 1.0) > tolerance)
        throw std::invalid_argument(
            "DensityMatrix trace " + std::to_string(tr.real()) +
            " differs from 1 beyond tolerance " + std::to_string(tolerance));

    eigenvalues_ = hermitian_spectrum(n_, entries_);
    if (eigenvalues_.front() < -kPsdTolerance)
        throw std::domain_error(
            "DensityMatrix not positive semidefinite: smallest eigenvalue " +
            std::to_string(eigenvalues_.front()));
}

DensityMatrix DensityMatrix::from_diagonal(const ProbVec& p) {
    std::vector<std::complex<double>> e(p.size() * p.size(), 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) e[i * p.size() + i] = p[i];
    return DensityMatrix(p.size(), std::move(e));
}

DensityMatrix from_pure_state(const PureState& s) {
    const std::size_t n = s.size();
    std::vector<std::complex<double>> e(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            e[i * n + j] = s[i] * std::conj(s[j]);
    return DensityMatrix(n, std::move(e));
}

double von_neumann_entropy(const DensityMatrix& rho) {
    double h = 0.0;
    for (double lambda : rho.eigenvalues()) {
        double l = std::clamp(lambda, 0.0, 1.0);
        if (l > 0.0) h -= l * std::log(l);
    }
    return std::max(h, 0.0);
}

DivergenceValue quantum_jsd(const DensityMatrix& rho1,
                            const DensityMatrix& rho2) {
    if (rho1.size() != rho2.size())
        throw std::invalid_argument("quantum_jsd: dimension mismatch");
    const std::size_t n = rho1.size();
    std::vector<std::complex<double>> avg(n * n);
    for (std::size_t k = 0; k < n * n; ++k)
        avg[k] = 0.5 * (rho1.entries()[k] + rho2.entries()[k]);
    DensityMatrix mid(n, std::move(avg));
    double v = von_neumann_entropy(mid) -
               0.5 * (von_neumann_entropy(rho1) + von_neumann_entropy(rho2));
    return DivergenceValue::finite(std::max(v, 0.0));
}

}  // namespace qdist
