#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdist/sweep_table.hpp"

namespace qdist {

/// Thrown when a sweep produces a value above its analytic bound.
struct BoundViolation : std::runtime_error {
    explicit BoundViolation(const std::string& what)
        : std::runtime_error(what) {}
};

/// Binary-distribution sweep: p = (a, 1-a) held fixed while q = (b, 1-b)
/// runs over the inclusive grid b_min, b_min + b_step, ..., b_max.
/// Columns: b, jsd, half_wootters_sq. Requires a, b_min, b_max in (0, 1),
/// b_min <= b_max, and b_step > 0.
SweepTable figure1_sweep(double a = 0.5, double b_min = 0.001,
                         double b_max = 0.999, double b_step = 0.001);

/// Rotated-basis sweep for the reference pair (1,0) and (cos phi, sin phi):
/// theta_k = 2 pi k / theta_steps for k = 0..theta_steps (endpoint included),
/// one column sqrt_2jsd_phi_<phi> per requested phi holding
/// sqrt(2 jsd(theta)). Throws BoundViolation if any value exceeds
/// phi + bound_slack; a negative slack demands a margin below the bound.
SweepTable figure2_sweep(const std::vector<double>& phis,
                         std::size_t theta_steps = 1024,
                         double bound_slack = 1e-10);

/// Long-format surface of sqrt(2 jsd) over the full (theta, phi) rectangle
/// [0, 2 pi] x [0, pi/2], theta-major, both endpoints included. Columns:
/// theta, phi, sqrt_2jsd. Throws BoundViolation if any value exceeds
/// phi + bound_slack.
SweepTable figure3_grid(std::size_t theta_points = 128,
                        std::size_t phi_points = 128,
                        double bound_slack = 1e-10);

}  // namespace qdist
