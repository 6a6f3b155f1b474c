#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qdist/classical.hpp"
#include "qdist/density.hpp"
#include "qdist/distinguishability.hpp"
#include "qdist/figures.hpp"
#include "qdist/properties.hpp"
#include "qdist/prob_vec.hpp"
#include "qdist/pure_state.hpp"
#include "qdist/sweep_table.hpp"

namespace {

using qdist::DensityMatrix;
using qdist::ProbVec;
using qdist::PureState;
using qdist::SweepTable;

double parse_real(const std::string& text) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    if (first != last && *first == '+') ++first;  // from_chars rejects '+'
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (first == last || ec != std::errc() || ptr != last)
        throw std::invalid_argument("invalid number: '" + text + "'");
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    parts.push_back(current);
    return parts;
}

ProbVec parse_distribution(const std::string& text, double tolerance) {
    std::vector<double> entries;
    for (const std::string& part : split(text, ','))
        entries.push_back(parse_real(part));
    return ProbVec(std::move(entries), tolerance);
}

// Complex entries use the form re, imi, or re+imi (also re-imi); a bare or
// signed trailing i stands for a unit imaginary part.
std::complex<double> parse_complex(const std::string& token) {
    if (token.empty())
        throw std::invalid_argument("empty complex entry");
    // split point: the last sign that is neither leading nor an exponent sign
    std::size_t cut = std::string::npos;
    for (std::size_t i = 1; i < token.size(); ++i) {
        char c = token[i];
        char prev = token[i - 1];
        if ((c == '+' || c == '-') && prev != 'e' && prev != 'E')
            cut = i;
    }
    bool imaginary_tail = token.back() == 'i' || token.back() == 'I';
    auto magnitude = [](const std::string& body) {
        if (body.empty() || body == "+") return 1.0;
        if (body == "-") return -1.0;
        return parse_real(body);
    };
    if (!imaginary_tail) {
        if (cut != std::string::npos)
            throw std::invalid_argument("invalid complex entry: '" + token +
                                        "' (imaginary part must end in i)");
        return {parse_real(token), 0.0};
    }
    std::string body = token.substr(0, token.size() - 1);
    if (cut == std::string::npos) return {0.0, magnitude(body)};
    return {parse_real(token.substr(0, cut)), magnitude(body.substr(cut))};
}

DensityMatrix density_from_file(const std::string& path, double tolerance) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot read file: " + path);
    std::vector<std::vector<std::complex<double>>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream tokens(line);
        std::vector<std::complex<double>> row;
        std::string token;
        while (tokens >> token) row.push_back(parse_complex(token));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw std::invalid_argument("file holds no matrix rows: " + path);
    std::size_t n = rows.size();
    std::vector<std::complex<double>> entries;
    entries.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n)
            throw std::invalid_argument("matrix in " + path +
                                        " is not square");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return DensityMatrix(n, std::move(entries), tolerance);
}

// A state spec is either a path to a matrix file or an inline
// comma-separated pure-state vector, which is projected to |s><s|.
DensityMatrix density_from_spec(const std::string& spec, double tolerance) {
    if (std::filesystem::exists(spec))
        return density_from_file(spec, tolerance);
    std::vector<std::complex<double>> amps;
    for (const std::string& part : split(spec, ','))
        amps.push_back(parse_complex(part));
    return qdist::from_pure_state(PureState(std::move(amps), tolerance));
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file)
        throw std::invalid_argument("cannot open output file: " + path);
    return file;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string trials_text(const std::optional<std::uint64_t>& t) {
    return t ? std::to_string(*t) : "inf";
}

void print_criterion(std::ostream& os, const std::string& prefix,
                     const qdist::CriterionVerdict& v) {
    os << prefix << "_statistic=" << SweepTable::format_value(v.statistic)
       << "\n"
       << prefix << "_threshold=" << SweepTable::format_value(v.threshold)
       << "\n"
       << prefix << "_distinguishable=" << yes_no(v.distinguishable) << "\n"
       << prefix << "_min_trials=" << trials_text(v.min_trials) << "\n";
}

std::vector<qdist::PropertyResult> run_suite(const std::string& suite,
                                             std::uint64_t seed,
                                             std::optional<std::size_t> samples) {
    if (!samples) return qdist::run_property_suite(suite, seed);
    if (suite == "metric") return qdist::run_metric_suite(seed, *samples);
    if (suite == "nonmetric") return qdist::run_nonmetric_suite(seed, *samples);
    if (suite == "kernel") return qdist::run_kernel_suite(seed, *samples);
    if (suite == "chain") return qdist::run_chain_suite(seed, *samples);
    if (suite == "desig") return qdist::run_desig_suite(seed, *samples);
    if (suite == "all") {
        std::vector<qdist::PropertyResult> all;
        for (const char* name :
             {"metric", "nonmetric", "kernel", "chain", "desig"}) {
            auto part = run_suite(name, seed, samples);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    throw std::invalid_argument("unknown property suite: " + suite);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Statistical distances on probability vectors and quantum states: "
        "figure sweeps, invariant suites, distinguishability criteria"};
    app.require_subcommand(1);

    std::string out_path;
    std::uint64_t seed = 12345;
    double tolerance = ProbVec::kDefaultTolerance;
    double bound_slack = 1e-10;

    // fig1
    double a = 0.5, b_min = 0.001, b_max = 0.999, b_step = 0.001;
    auto* fig1 = app.add_subcommand(
        "fig1", "Sweep of jsd and Wootters^2/2 between (a,1-a) and (b,1-b)");
    fig1->add_option("--a", a, "fixed first distribution parameter");
    fig1->add_option("--b-min", b_min, "sweep start");
    fig1->add_option("--b-max", b_max, "sweep end (inclusive)");
    fig1->add_option("--b-step", b_step, "sweep step");
    fig1->add_option("--out", out_path, "output CSV path (default stdout)");
    fig1->add_option("--tolerance", tolerance, "validation tolerance");

    // fig2
    std::vector<double> phis{0.5, 0.8};
    std::size_t theta_steps = 1024;
    auto* fig2 = app.add_subcommand(
        "fig2", "sqrt(2 jsd) under the rotated basis family vs theta");
    fig2->add_option("--phi", phis, "state angles phi (comma separated)")
        ->delimiter(',');
    fig2->add_option("--theta-steps", theta_steps,
                     "number of theta steps over [0, 2 pi]");
    fig2->add_option("--bound-slack", bound_slack,
                     "tolerated excess over the phi bound");
    fig2->add_option("--out", out_path, "output CSV path (default stdout)");
    fig2->add_option("--tolerance", tolerance, "validation tolerance");

    // fig3
    std::size_t theta_points = 128, phi_points = 128;
    auto* fig3 = app.add_subcommand(
        "fig3", "long-format sqrt(2 jsd) surface over (theta, phi)");
    fig3->add_option("--theta-points", theta_points, "grid points in theta");
    fig3->add_option("--phi-points", phi_points, "grid points in phi");
    fig3->add_option("--bound-slack", bound_slack,
                     "tolerated excess over the phi bound");
    fig3->add_option("--out", out_path, "output CSV path (default stdout)");
    fig3->add_option("--tolerance", tolerance, "validation tolerance");

    // properties
    std::string suite;
    std::uint64_t samples_flag = 0;
    auto* properties = app.add_subcommand(
        "properties",
        "randomized invariant suites (metric, nonmetric, kernel, chain, "
        "desig, all)");
    properties->add_option("suite", suite, "suite name")->required();
    properties->add_option("--samples", samples_flag,
                           "samples per check (0 = suite default)");
    properties->add_option("--seed", seed, "random seed");
    properties->add_option("--out", out_path,
                           "output CSV path (default stdout)");
    properties->add_option("--tolerance", tolerance, "validation tolerance");

    // criteria
    std::string p1_text, p2_text;
    std::uint64_t trials = 1;
    auto* criteria = app.add_subcommand(
        "criteria",
        "distinguishability criteria for a pair of distributions");
    criteria->add_option("p1", p1_text, "first distribution, comma separated")
        ->required();
    criteria->add_option("p2", p2_text, "second distribution, comma separated")
        ->required();
    criteria->add_option("--trials", trials, "trial count L");
    criteria->add_option("--out", out_path, "output path (default stdout)");
    criteria->add_option("--tolerance", tolerance, "validation tolerance");

    // qjsd
    std::string rho1_spec, rho2_spec;
    auto* qjsd_cmd = app.add_subcommand(
        "qjsd",
        "quantum JSD of two density matrices (files) or pure states (inline "
        "vectors, auto-projected)");
    qjsd_cmd->add_option("rho1", rho1_spec, "matrix file or inline vector")
        ->required();
    qjsd_cmd->add_option("rho2", rho2_spec, "matrix file or inline vector")
        ->required();
    qjsd_cmd->add_option("--out", out_path, "output path (default stdout)");
    qjsd_cmd->add_option("--tolerance", tolerance, "validation tolerance");

    // simulate
    std::string sim_p1, sim_p2;
    std::uint64_t experiments = 10000;
    std::uint64_t sim_trials = 101;
    auto* simulate = app.add_subcommand(
        "simulate",
        "Monte Carlo two-hypothesis discrimination by maximum likelihood");
    simulate->add_option("p1", sim_p1, "first distribution, comma separated")
        ->required();
    simulate->add_option("p2", sim_p2, "second distribution, comma separated")
        ->required();
    simulate->add_option("--trials", sim_trials, "draws per experiment L");
    simulate->add_option("--experiments", experiments,
                         "number of repeated experiments");
    simulate->add_option("--seed", seed, "random seed");
    simulate->add_option("--out", out_path, "output path (default stdout)");
    simulate->add_option("--tolerance", tolerance, "validation tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    std::ofstream out_file;
    try {
        std::ostream& os = open_output(out_path, out_file);

        if (*fig1) {
            os << qdist::figure1_sweep(a, b_min, b_max, b_step).to_csv();
        } else if (*fig2) {
            os << qdist::figure2_sweep(phis, theta_steps, bound_slack)
                      .to_csv();
        } else if (*fig3) {
            os << qdist::figure3_grid(theta_points, phi_points, bound_slack)
                      .to_csv();
        } else if (*properties) {
            std::optional<std::size_t> samples;
            if (samples_flag > 0) samples = samples_flag;
            auto results = run_suite(suite, seed, samples);
            os << "property,samples,worst_violation,status,seed\n";
            for (const auto& r : results)
                os << r.name << ',' << r.samples << ','
                   << SweepTable::format_value(r.worst_violation) << ','
                   << (r.pass ? "pass" : "fail") << ',' << seed << "\n";
            if (!qdist::all_pass(results)) return 2;
        } else if (*criteria) {
            ProbVec p1 = parse_distribution(p1_text, tolerance);
            ProbVec p2 = parse_distribution(p2_text, tolerance);
            try {
                print_criterion(os, "wootters",
                                qdist::wootters_criterion(p1, p2, trials));
            } catch (const std::domain_error& e) {
                os << "wootters_notice=" << e.what() << "\n";
            }
            print_criterion(os, "jsd", qdist::jsd_criterion(p1, p2, trials));
        } else if (*qjsd_cmd) {
            DensityMatrix r1 = density_from_spec(rho1_spec, tolerance);
            DensityMatrix r2 = density_from_spec(rho2_spec, tolerance);
            double v = qdist::quantum_jsd(r1, r2).value();
            os << "entropy_1="
               << SweepTable::format_value(qdist::von_neumann_entropy(r1))
               << "\n"
               << "entropy_2="
               << SweepTable::format_value(qdist::von_neumann_entropy(r2))
               << "\n"
               << "qjsd=" << SweepTable::format_value(v) << "\n";
        } else if (*simulate) {
            ProbVec p1 = parse_distribution(sim_p1, tolerance);
            ProbVec p2 = parse_distribution(sim_p2, tolerance);
            double rate = qdist::monte_carlo_discrimination(
                p1, p2, sim_trials, experiments, seed);
            os << "trials=" << sim_trials << "\n"
               << "experiments=" << experiments << "\n"
               << "seed=" << seed << "\n"
               << "successes="
               << static_cast<std::uint64_t>(std::llround(
                      rate * static_cast<double>(experiments)))
               << "\n"
               << "success_rate=" << SweepTable::format_value(rate) << "\n";
        }
    } catch (const qdist::BoundViolation& e) {
        std::cerr << "bound violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
