#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "qdist/prob_vec.hpp"

namespace qdist {

/// Deterministic random source. The engine (std::mt19937_64) has a
/// standard-mandated bit-exact output sequence, and every transformation here
/// is hand-rolled, so results are reproducible across standard libraries —
/// unlike std::uniform_real_distribution / std::normal_distribution, whose
/// algorithms are implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in (0, 1].
    double uniform_pos() {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    /// Standard normal deviate: Box-Muller, generating a pair per two
    /// uniforms and caching the second.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform_pos();  // (0,1]: log is finite
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;  // 2 pi
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    /// Exponential(1) deviate, finite and nonnegative.
    double exponential() { return -std::log1p(-uniform()); }

    /// Uniform integer in [0, n); n must be small (callers use n <= 2^32).
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(uniform() * static_cast<double>(n)) %
               n;
    }

    /// splitmix64 mix of (seed, index) — derives independent child seeds that
    /// do not depend on draw order.
    static std::uint64_t substream_seed(std::uint64_t seed,
                                        std::uint64_t index) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Child generator for batch `index`, independent of this object's state.
    Rng substream(std::uint64_t index) const {
        return Rng(substream_seed(seed_, index));
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// Flat-Dirichlet sample on X_N^+ via normalized exponential variates.
inline ProbVec random_simplex(std::size_t n, Rng& rng) {
    std::vector<double> w(n);
    for (double& x : w) x = rng.exponential();
    return ProbVec::normalized(std::move(w));
}

}  // namespace qdist
