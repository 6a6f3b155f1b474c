#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qdist {

// Outcome of one randomized property check. `worst_violation` is the most
// adverse margin seen across all samples; its sign convention is
// property-specific (inequality overshoot, or best witness for violation
// searches), so `pass` is authoritative.
struct PropertyResult {
    std::string name;
    std::size_t samples;
    double worst_violation;
    bool pass;
};

// Invariants every distance in the toolkit must satisfy: symmetry, vanishing
// self-distance, positivity on distinct pairs, range bounds, the
// Hellinger/Bhattacharyya identity, and the triangle inequality for
// sqrt(JSD).
std::vector<PropertyResult> run_metric_suite(std::uint64_t seed,
                                             std::size_t samples_per_dim = 4000);

// Triangle-violation searches for the Wootters and Bhattacharyya distances.
// These checks pass when a violation IS found.
std::vector<PropertyResult> run_nonmetric_suite(
    std::uint64_t seed, std::size_t samples_per_dim = 40000);

// Negative semi-definiteness of the JSD kernel under zero-sum weights.
std::vector<PropertyResult> run_kernel_suite(std::uint64_t seed,
                                             std::size_t samples = 3000);

// Measurement chain for qubit pairs: sqrt(2 jsd) <= Wootters distance
// <= arccos(overlap), for random state pairs and random bases.
std::vector<PropertyResult> run_chain_suite(std::uint64_t seed,
                                            std::size_t samples = 5000);

// sum_i |<phi_i|psi1>| |<phi_i|psi2>| >= |<psi1|psi2>| across dimensions.
std::vector<PropertyResult> run_desig_suite(std::uint64_t seed,
                                            std::size_t samples_per_dim = 2000);

// Dispatch by suite name: "metric", "nonmetric", "kernel", "chain", "desig",
// or "all". Throws std::invalid_argument for unknown names.
std::vector<PropertyResult> run_property_suite(const std::string& suite,
                                               std::uint64_t seed);

bool all_pass(const std::vector<PropertyResult>& results);

}  // namespace qdist
