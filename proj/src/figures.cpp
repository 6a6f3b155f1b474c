#include "qdist/figures.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qdist/classical.hpp"
#include "qdist/hilbert.hpp"
#include "qdist/prob_vec.hpp"

namespace qdist {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Shortest round-trip representation, for embedding parameters in column
// names.
std::string shortest_repr(double x) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc())
        throw std::runtime_error("failed to format column label");
    return std::string(buf, ptr);
}

double checked_sqrt_2jsd(double phi, double theta, double bound_slack) {
    double value = std::sqrt(2.0 * rotated_jsd_2d(phi, theta).value());
    if (value > phi + bound_slack)
        throw BoundViolation("sqrt(2 jsd) = " + shortest_repr(value) +
                             " exceeds phi = " + shortest_repr(phi) +
                             " at theta = " + shortest_repr(theta));
    return value;
}

}  // namespace

SweepTable figure1_sweep(double a, double b_min, double b_max, double b_step) {
    if (!(a > 0.0 && a < 1.0))
        throw std::domain_error("figure1_sweep: a must lie in (0, 1)");
    if (!(b_min > 0.0 && b_max < 1.0))
        throw std::domain_error(
            "figure1_sweep: b_min and b_max must lie in (0, 1)");
    if (!(b_min <= b_max))
        throw std::invalid_argument("figure1_sweep: b_min must be <= b_max");
    if (!(b_step > 0.0))
        throw std::invalid_argument("figure1_sweep: b_step must be positive");

    ProbVec p({a, 1.0 - a});
    SweepTable table({"b", "jsd", "half_wootters_sq"});
    std::size_t rows =
        static_cast<std::size_t>(std::floor((b_max - b_min) / b_step + 0.5)) +
        1;
    for (std::size_t k = 0; k < rows; ++k) {
        double b = b_min + static_cast<double>(k) * b_step;
        // grace covers accumulated roundoff only; a step that does not divide
        // the range truncates at the last point inside [b_min, b_max]
        if (b > b_max + 1e-9 * b_step) break;
        ProbVec q({b, 1.0 - b});
        double w = wootters_classical(p, q).value();
        table.add_row({b, jsd(p, q).value(), 0.5 * w * w});
    }
    return table;
}

SweepTable figure2_sweep(const std::vector<double>& phis,
                         std::size_t theta_steps, double bound_slack) {
    if (phis.empty())
        throw std::invalid_argument("figure2_sweep: need at least one phi");
    if (theta_steps == 0)
        throw std::invalid_argument("figure2_sweep: theta_steps must be >= 1");

    std::vector<std::string> columns{"theta"};
    for (double phi : phis) {
        if (!(phi >= 0.0 && phi <= std::numbers::pi / 2.0))
            throw std::domain_error(
                "figure2_sweep: phi must lie in [0, pi/2]");
        columns.push_back("sqrt_2jsd_phi_" + shortest_repr(phi));
    }

    SweepTable table(columns);
    for (std::size_t k = 0; k <= theta_steps; ++k) {
        double theta = k == theta_steps
                           ? kTwoPi
                           : kTwoPi * static_cast<double>(k) /
                                 static_cast<double>(theta_steps);
        std::vector<double> row{theta};
        for (double phi : phis)
            row.push_back(checked_sqrt_2jsd(phi, theta, bound_slack));
        table.add_row(row);
    }
    return table;
}

SweepTable figure3_grid(std::size_t theta_points, std::size_t phi_points,
                        double bound_slack) {
    if (theta_points < 2 || phi_points < 2)
        throw std::invalid_argument(
            "figure3_grid: need at least 2 points per axis");

    SweepTable table({"theta", "phi", "sqrt_2jsd"});
    for (std::size_t j = 0; j < theta_points; ++j) {
        double theta = j + 1 == theta_points
                           ? kTwoPi
                           : kTwoPi * static_cast<double>(j) /
                                 static_cast<double>(theta_points - 1);
        for (std::size_t k = 0; k < phi_points; ++k) {
            double phi = k + 1 == phi_points
                             ? std::numbers::pi / 2.0
                             : std::numbers::pi / 2.0 *
                                   static_cast<double>(k) /
                                   static_cast<double>(phi_points - 1);
            table.add_row({theta, phi, checked_sqrt_2jsd(phi, theta,
                                                         bound_slack)});
        }
    }
    return table;
}

}  // namespace qdist
