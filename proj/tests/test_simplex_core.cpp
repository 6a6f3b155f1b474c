#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "qdist/classical.hpp"
#include "qdist/divergence.hpp"
#include "qdist/prob_vec.hpp"
#include "qdist/rng.hpp"

using namespace qdist;

namespace {

std::vector<long double> widen(const ProbVec& p) {
    return std::vector<long double>(p.begin(), p.end());
}

}  // namespace

TEST_CASE("DivergenceValue finite/infinite semantics") {
    DivergenceValue v = DivergenceValue::finite(0.25);
    CHECK(!v.is_infinite());
    CHECK(v.value() == 0.25);

    DivergenceValue inf = DivergenceValue::infinity();
    CHECK(inf.is_infinite());
    CHECK(std::isinf(inf.value()));

    CHECK_THROWS_AS(DivergenceValue::finite(-1e-3), std::invalid_argument);
    CHECK_THROWS_AS(
        DivergenceValue::finite(std::numeric_limits<double>::infinity()),
        std::invalid_argument);
    CHECK_THROWS_AS(
        DivergenceValue::finite(std::numeric_limits<double>::quiet_NaN()),
        std::invalid_argument);
}

TEST_CASE("ProbVec validates simplex membership") {
    CHECK_NOTHROW(ProbVec({0.5, 0.5}));
    CHECK_NOTHROW(ProbVec({0.2, 0.3, 0.5}));
    CHECK_THROWS_AS(ProbVec({1.0}), std::invalid_argument);        // N >= 2
    CHECK_THROWS_AS(ProbVec({0.5, 0.6}), std::invalid_argument);   // sum != 1
    CHECK_THROWS_AS(ProbVec({-0.1, 1.1}), std::invalid_argument);  // negative
    CHECK_THROWS_AS(ProbVec({0.5, 0.5, 0.0, -1e-3}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        ProbVec({std::numeric_limits<double>::quiet_NaN(), 1.0}),
        std::invalid_argument);

    // roundoff-scale negatives inside the tolerance are absorbed to zero
    ProbVec p({1.0 + 1e-12, -1e-12});
    CHECK(p[1] == 0.0);
    CHECK(p[0] <= 1.0);
}

TEST_CASE("ProbVec::normalized builds distributions from weights") {
    ProbVec p = ProbVec::normalized({2.0, 6.0});
    CHECK(p[0] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(p[1] == doctest::Approx(0.75).epsilon(1e-15));
    CHECK_THROWS_AS(ProbVec::normalized({0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(ProbVec::normalized({-1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("dimension mismatch is rejected across the distance family") {
    ProbVec p({0.5, 0.5});
    ProbVec q({0.2, 0.3, 0.5});
    CHECK_THROWS_AS(require_same_dimension(p, q), std::invalid_argument);
    CHECK_THROWS_AS(jsd(p, q), std::invalid_argument);
    CHECK_THROWS_AS(kl_divergence(p, q), std::invalid_argument);
    CHECK_THROWS_AS(bhattacharyya_coefficient(p, q), std::invalid_argument);
    CHECK_THROWS_AS(hellinger_sq(p, q), std::invalid_argument);
    CHECK_THROWS_AS(chi2_half_distance(p, q), std::invalid_argument);
}

TEST_CASE("Shannon entropy reference values") {
    CHECK(shannon_entropy(ProbVec({0.5, 0.5})) ==
          doctest::Approx(std::numbers::ln2).epsilon(1e-15));
    CHECK(shannon_entropy(ProbVec({0.25, 0.75})) ==
          doctest::Approx(0.56233514461880835029).epsilon(1e-14));
    CHECK(shannon_entropy(ProbVec({1.0, 0.0})) == 0.0);
    ProbVec u({0.25, 0.25, 0.25, 0.25});
    CHECK(shannon_entropy(u) == doctest::Approx(std::log(4.0)).epsilon(1e-15));
}

TEST_CASE("entropy bounds hold on random distributions") {
    Rng rng(2024);
    for (std::size_t n = 2; n <= 6; ++n) {
        for (int i = 0; i < 500; ++i) {
            ProbVec p = random_simplex(n, rng);
            double h = shannon_entropy(p);
            CHECK(h >= 0.0);
            CHECK(h <= std::log(static_cast<double>(n)) + 1e-12);
        }
    }
}

TEST_CASE("KL divergence reference value, flags, and positivity") {
    ProbVec p({0.6, 0.4});
    ProbVec q({0.5, 0.5});
    CHECK(kl_divergence(p, q).value() ==
          doctest::Approx(0.020135513550688873421).epsilon(1e-14));
    CHECK(kl_divergence(p, p).value() == 0.0);

    // support mismatch raises the infinite flag, in either slot that matters
    CHECK(kl_divergence(ProbVec({1.0, 0.0}), ProbVec({0.0, 1.0}))
              .is_infinite());
    CHECK(kl_divergence(ProbVec({0.5, 0.5}), ProbVec({1.0, 0.0}))
              .is_infinite());
    // zero in the first argument only is harmless: 0 ln(0/q) := 0
    CHECK(!kl_divergence(ProbVec({1.0, 0.0}), ProbVec({0.5, 0.5}))
               .is_infinite());

    Rng rng(7);
    for (int i = 0; i < 2000; ++i) {
        ProbVec a = random_simplex(3, rng);
        ProbVec b = random_simplex(3, rng);
        double d = kl_divergence(a, b).value();
        CHECK(d >= 0.0);
        CHECK(std::abs(d - static_cast<double>(oracle::kl(widen(a), widen(b)))) <
              1e-13);
    }
}

TEST_CASE("JSD reference value, bounds, and symmetry") {
    ProbVec p({0.5, 0.5});
    ProbVec q({0.9, 0.1});
    CHECK(jsd(p, q).value() ==
          doctest::Approx(0.10174922507919668856).epsilon(1e-14));
    CHECK(jsd(p, p).value() == 0.0);
    CHECK(jsd(ProbVec({1.0, 0.0}), ProbVec({0.0, 1.0})).value() ==
          doctest::Approx(std::numbers::ln2).epsilon(1e-15));

    Rng rng(11);
    for (int i = 0; i < 2000; ++i) {
        ProbVec a = random_simplex(4, rng);
        ProbVec b = random_simplex(4, rng);
        double d = jsd(a, b).value();
        CHECK(d >= 0.0);
        CHECK(d <= std::numbers::ln2 + 1e-12);
        CHECK(d == jsd(b, a).value());  // bitwise-symmetric evaluation
        long double ref = oracle::jsd(widen(a), widen(b));
        CHECK(std::abs(d - static_cast<double>(ref)) < 1e-14);
    }
}

TEST_CASE("Bhattacharyya coefficient and the angular/Hellinger identities") {
    ProbVec p({0.5, 0.5});
    ProbVec q({0.8, 0.2});
    double b = bhattacharyya_coefficient(p, q);
    CHECK(b == doctest::Approx(0.9486832980505137996).epsilon(1e-14));
    CHECK(wootters_classical(p, q).value() ==
          doctest::Approx(0.3217505543966421934).epsilon(1e-13));
    CHECK(hellinger_sq(p, q).value() ==
          doctest::Approx(0.0513167019494862004).epsilon(1e-12));
    CHECK(bhattacharyya_distance(p, q).value() ==
          doctest::Approx(0.052680257828913150614).epsilon(1e-13));

    // orthogonal supports: B = 0, angle pi/2, Hellinger^2 = 1, -ln B infinite
    ProbVec e1({1.0, 0.0});
    ProbVec e2({0.0, 1.0});
    CHECK(bhattacharyya_coefficient(e1, e2) == 0.0);
    CHECK(wootters_classical(e1, e2).value() ==
          doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
    CHECK(hellinger_sq(e1, e2).value() == 1.0);
    CHECK(bhattacharyya_distance(e1, e2).is_infinite());

    Rng rng(13);
    for (int i = 0; i < 2000; ++i) {
        ProbVec a = random_simplex(5, rng);
        ProbVec c = random_simplex(5, rng);
        double bc = bhattacharyya_coefficient(a, c);
        CHECK(bc >= 0.0);
        CHECK(bc <= 1.0);
        CHECK(bc == doctest::Approx(static_cast<double>(oracle::bhattacharyya(
                        widen(a), widen(c))))
                        .epsilon(1e-13));
        CHECK(std::abs(hellinger_sq(a, c).value() - (1.0 - bc)) < 1e-12);
        CHECK(std::abs(wootters_classical(a, c).value() - std::acos(bc)) <
              1e-12);
    }
}

TEST_CASE("chi-square half distance values and singularity") {
    CHECK(chi2_half_distance(ProbVec({0.5, 0.5}), ProbVec({0.51, 0.49}))
              .value() == doctest::Approx(0.01).epsilon(1e-14));
    CHECK(chi2_half_distance(ProbVec({0.25, 0.75}), ProbVec({0.3, 0.7}))
              .value() ==
          doctest::Approx(0.057735026918962576451).epsilon(1e-14));
    CHECK(chi2_half_distance(ProbVec({0.5, 0.5}), ProbVec({0.5, 0.5}))
              .value() == 0.0);

    // zero denominator with mass mismatch is singular; matched zeros are fine
    CHECK_THROWS_AS(
        chi2_half_distance(ProbVec({1.0, 0.0}), ProbVec({0.0, 1.0})),
        std::domain_error);
    CHECK_NOTHROW(chi2_half_distance(ProbVec({0.5, 0.5, 0.0}),
                                     ProbVec({0.2, 0.8, 0.0})));

    // order matters: the denominator uses the first argument
    ProbVec a({0.9, 0.1});
    ProbVec b({0.5, 0.5});
    CHECK(chi2_half_distance(a, b).value() !=
          chi2_half_distance(b, a).value());
}

TEST_CASE("distance dispatch matches the named functions") {
    Rng rng(17);
    ProbVec p = random_simplex(4, rng);
    ProbVec q = random_simplex(4, rng);
    CHECK(classical_distance(DistanceKind::jsd, p, q).value() ==
          jsd(p, q).value());
    CHECK(classical_distance(DistanceKind::wootters, p, q).value() ==
          wootters_classical(p, q).value());
    CHECK(classical_distance(DistanceKind::hellinger_sq, p, q).value() ==
          hellinger_sq(p, q).value());
    CHECK(classical_distance(DistanceKind::bhattacharyya, p, q).value() ==
          bhattacharyya_distance(p, q).value());

    CHECK(std::string(distance_kind_name(DistanceKind::jsd)) == "jsd");
    CHECK(std::string(distance_kind_name(DistanceKind::wootters)) ==
          "wootters");
    CHECK(std::string(distance_kind_name(DistanceKind::hellinger_sq)) ==
          "hellinger_sq");
    CHECK(std::string(distance_kind_name(DistanceKind::bhattacharyya)) ==
          "bhattacharyya");
}

TEST_CASE("Rng is deterministic and substreams are decorrelated") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.uniform() == b.uniform());

    Rng c(42);
    bool differs = false;
    Rng d(43);
    for (int i = 0; i < 10; ++i)
        if (c.uniform() != d.uniform()) differs = true;
    CHECK(differs);

    // substreams with distinct indices start from distinct seeds
    CHECK(Rng::substream_seed(42, 0) != Rng::substream_seed(42, 1));
    CHECK(Rng::substream_seed(42, 0) != Rng::substream_seed(43, 0));

    Rng base(99);
    for (int i = 0; i < 1000; ++i) {
        double u = base.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        double up = base.uniform_pos();
        CHECK(up > 0.0);
        CHECK(up <= 1.0);
        double e = base.exponential();
        CHECK(e >= 0.0);
        CHECK(std::isfinite(base.normal()));
    }
}

TEST_CASE("random_simplex yields valid interior-heavy distributions") {
    Rng rng(5);
    for (std::size_t n = 2; n <= 6; ++n) {
        for (int i = 0; i < 200; ++i) {
            ProbVec p = random_simplex(n, rng);
            CHECK(p.size() == n);
            double sum = 0.0;
            for (double x : p) {
                CHECK(x >= 0.0);
                sum += x;
            }
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}
