#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "qdist/classical.hpp"
#include "qdist/density.hpp"
#include "qdist/hilbert.hpp"
#include "qdist/prob_vec.hpp"
#include "qdist/pure_state.hpp"
#include "qdist/rng.hpp"

using namespace qdist;
using cd = std::complex<double>;

namespace {

// rho = (I + r . sigma) / 2 for a Bloch vector with |r| <= 1.
DensityMatrix bloch_density(double x, double y, double z) {
    std::vector<cd> m = {cd(0.5 * (1 + z), 0.0), cd(0.5 * x, -0.5 * y),
                         cd(0.5 * x, 0.5 * y), cd(0.5 * (1 - z), 0.0)};
    return DensityMatrix(2, m);
}

}  // namespace

TEST_CASE("density matrix constructor validation") {
    // valid maximally mixed state
    DensityMatrix mixed(2, {cd(0.5), cd(0.0), cd(0.0), cd(0.5)});
    CHECK(mixed.size() == 2);
    CHECK(mixed.entry(0, 0) == cd(0.5));
    CHECK(mixed.entry(0, 1) == cd(0.0));

    // entry count must be n*n
    CHECK_THROWS_AS(DensityMatrix(2, {cd(1.0), cd(0.0)}),
                    std::invalid_argument);
    // dimension must be at least 2
    CHECK_THROWS_AS(DensityMatrix(1, {cd(1.0)}), std::invalid_argument);
    // trace must be 1
    CHECK_THROWS_AS(DensityMatrix(2, {cd(0.7), cd(0.0), cd(0.0), cd(0.7)}),
                    std::invalid_argument);
    // Hermiticity: rho[0][1] must equal conj(rho[1][0])
    CHECK_THROWS_AS(
        DensityMatrix(2, {cd(0.5), cd(0.3), cd(-0.3), cd(0.5)}),
        std::invalid_argument);
    // diag(1.5, -0.5) is Hermitian with unit trace but not PSD
    CHECK_THROWS_AS(DensityMatrix(2, {cd(1.5), cd(0.0), cd(0.0), cd(-0.5)}),
                    std::domain_error);
    // non-finite entries are rejected
    CHECK_THROWS_AS(
        DensityMatrix(
            2, {cd(std::numeric_limits<double>::quiet_NaN()), cd(0.0),
                cd(0.0), cd(0.5)}),
        std::invalid_argument);

    // a small Hermiticity defect within tolerance is accepted
    DensityMatrix slightly_off(
        2, {cd(0.5), cd(0.1, 1e-12), cd(0.1, 1e-12), cd(0.5)});
    CHECK(slightly_off.size() == 2);
    // ... but not outside a tightened tolerance
    CHECK_THROWS_AS(
        DensityMatrix(2, {cd(0.5), cd(0.1, 1e-12), cd(0.1, 1e-12), cd(0.5)},
                      1e-14),
        std::invalid_argument);
}

TEST_CASE("diagonal embedding reproduces the classical spectrum") {
    ProbVec p({0.1, 0.25, 0.65});
    DensityMatrix rho = DensityMatrix::from_diagonal(p);
    CHECK(rho.size() == 3);
    CHECK(rho.entry(1, 1) == cd(0.25));
    CHECK(rho.entry(0, 2) == cd(0.0));

    // eigenvalues ascend and match the sorted probabilities
    const std::vector<double>& ev = rho.eigenvalues();
    REQUIRE(ev.size() == 3);
    CHECK(ev[0] == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(ev[1] == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(ev[2] == doctest::Approx(0.65).epsilon(1e-14));

    // entropy of the diagonal state equals the Shannon entropy
    CHECK(std::abs(von_neumann_entropy(rho) - shannon_entropy(p)) < 1e-13);
}

TEST_CASE("pure-state projector has spectrum {0,...,0,1}") {
    PureState s({cd(0.6), cd(0.0, 0.8)});
    DensityMatrix rho = from_pure_state(s);
    CHECK(rho.entry(0, 0).real() == doctest::Approx(0.36).epsilon(1e-14));
    CHECK(rho.entry(1, 1).real() == doctest::Approx(0.64).epsilon(1e-14));
    // off-diagonal: 0.6 * conj(0.8i) = -0.48i
    CHECK(rho.entry(0, 1).imag() == doctest::Approx(-0.48).epsilon(1e-14));
    CHECK(rho.entry(1, 0).imag() == doctest::Approx(0.48).epsilon(1e-14));

    const std::vector<double>& ev = rho.eigenvalues();
    CHECK(std::abs(ev[0]) < 1e-12);
    CHECK(std::abs(ev[1] - 1.0) < 1e-12);
    CHECK(std::abs(von_neumann_entropy(rho)) < 1e-10);

    Rng rng(2024);
    for (int i = 0; i < 50; ++i) {
        PureState t = random_pure_state(3, rng);
        DensityMatrix proj = from_pure_state(t);
        const std::vector<double>& lam = proj.eigenvalues();
        CHECK(std::abs(lam[0]) < 1e-12);
        CHECK(std::abs(lam[1]) < 1e-12);
        CHECK(std::abs(lam[2] - 1.0) < 1e-12);
    }
}

TEST_CASE("2x2 spectra match the closed-form Hermitian eigenvalues") {
    Rng rng(555);
    for (int i = 0; i < 200; ++i) {
        // random Bloch vector drawn inside the unit ball
        double x, y, z;
        do {
            x = 2.0 * rng.uniform() - 1.0;
            y = 2.0 * rng.uniform() - 1.0;
            z = 2.0 * rng.uniform() - 1.0;
        } while (x * x + y * y + z * z > 1.0);

        DensityMatrix rho = bloch_density(x, y, z);
        auto exact = oracle::eig2(0.5 * (1 + z), 0.5 * (1 - z),
                                  std::complex<long double>(0.5 * x, -0.5 * y));
        const std::vector<double>& ev = rho.eigenvalues();
        CHECK(std::abs(ev[0] - static_cast<double>(exact[0])) < 1e-14);
        CHECK(std::abs(ev[1] - static_cast<double>(exact[1])) < 1e-14);

        // closed form: lambda = (1 +- |r|) / 2
        double r = std::sqrt(x * x + y * y + z * z);
        CHECK(std::abs(ev[1] - 0.5 * (1 + r)) < 1e-13);
    }
}

TEST_CASE("von Neumann entropy attains its extremes") {
    for (std::size_t n = 2; n <= 5; ++n) {
        std::vector<double> u(n, 1.0 / static_cast<double>(n));
        DensityMatrix mixed = DensityMatrix::from_diagonal(ProbVec(u));
        CHECK(std::abs(von_neumann_entropy(mixed) -
                       std::log(static_cast<double>(n))) < 1e-13);
    }
    DensityMatrix pure = DensityMatrix::from_diagonal(ProbVec({1.0, 0.0}));
    CHECK(von_neumann_entropy(pure) == 0.0);
}

TEST_CASE("quantum JSD basics: symmetry, identity, orthogonal extremes") {
    DensityMatrix a = bloch_density(0.3, -0.2, 0.4);
    DensityMatrix b = bloch_density(-0.1, 0.5, 0.2);
    double ab = quantum_jsd(a, b).value();
    double ba = quantum_jsd(b, a).value();
    CHECK(ab == ba);
    CHECK(ab > 0.0);
    CHECK(ab < std::numbers::ln2 + 1e-12);

    CHECK(quantum_jsd(a, a).value() == doctest::Approx(0.0).epsilon(1e-12));

    // orthogonal pure states saturate ln 2
    DensityMatrix up = from_pure_state(PureState({cd(1.0), cd(0.0)}));
    DensityMatrix down = from_pure_state(PureState({cd(0.0), cd(1.0)}));
    CHECK(std::abs(quantum_jsd(up, down).value() - std::numbers::ln2) < 1e-12);

    CHECK_THROWS_AS(
        quantum_jsd(up, DensityMatrix::from_diagonal(ProbVec({0.2, 0.3, 0.5}))),
        std::invalid_argument);
}

TEST_CASE("pure-pair quantum JSD follows the overlap law") {
    // for rank-1 projectors the mixture has eigenvalues (1 +- c)/2, so
    // qJSD = h2((1+c)/2) with c = |<s1|s2>|.
    Rng rng(808);
    for (int i = 0; i < 60; ++i) {
        std::size_t n = 2 + (i % 2);
        PureState s1 = random_pure_state(n, rng);
        PureState s2 = random_pure_state(n, rng);
        double c = overlap(s1, s2);
        double expected =
            static_cast<double>(oracle::binary_entropy(0.5L * (1.0L + c)));
        double got = quantum_jsd(from_pure_state(s1), from_pure_state(s2))
                         .value();
        CHECK(std::abs(got - expected) < 1e-10);
    }

    // explicit real-amplitude pairs with prescribed overlap
    for (double c : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        PureState s1({cd(1.0), cd(0.0)});
        PureState s2({cd(c), cd(std::sqrt(1.0 - c * c))});
        double expected =
            static_cast<double>(oracle::binary_entropy(0.5L * (1.0L + c)));
        double got = quantum_jsd(from_pure_state(s1), from_pure_state(s2))
                         .value();
        CHECK(std::abs(got - expected) < 1e-10);
    }
}

TEST_CASE("diagonal densities reduce the quantum JSD to the classical one") {
    Rng rng(909);
    for (int i = 0; i < 100; ++i) {
        std::size_t n = 2 + rng.below(4);
        ProbVec p = random_simplex(n, rng);
        ProbVec q = random_simplex(n, rng);
        double quantum = quantum_jsd(DensityMatrix::from_diagonal(p),
                                     DensityMatrix::from_diagonal(q))
                             .value();
        double classical = jsd(p, q).value();
        CHECK(std::abs(quantum - classical) < 1e-12);
    }
}

TEST_CASE("quantum JSD stays finite where the KL divergence diverges") {
    ProbVec e1({1.0, 0.0});
    ProbVec e2({0.0, 1.0});
    CHECK(kl_divergence(e1, e2).is_infinite());
    DivergenceValue q = quantum_jsd(DensityMatrix::from_diagonal(e1),
                                    DensityMatrix::from_diagonal(e2));
    CHECK(!q.is_infinite());
    CHECK(std::abs(q.value() - std::numbers::ln2) < 1e-12);
}
