#ifndef KERNELALG_CONFIG_HPP
#define KERNELALG_CONFIG_HPP

#include <cstdint>
#include <string>

#include <Eigen/Core>

#include "kernelalg/space.hpp"

namespace kernelalg {

enum class Suite { axioms, units, center, ideals, representation, derivation, all };

std::string to_string(Suite s);
Suite suite_from_string(const std::string& name);

struct Tolerances {
    double algebraic = 1e-12;   // identities exact in exact arithmetic
    double rank = 1e-10;        // subspace extraction threshold
    double quad_slack_c = 10.0; // analytic bounds get + C/N
};

// Flat key = value experiment document, schema kernelalg-config-v1.
// Space descriptor fields: kind, resolution, weights (finite), metric (finite;
// row-major, rows separated by ';'). Run fields: suite, seed, out, and
// optional tolerance overrides tol_algebraic, tol_rank, quad_slack_c.
struct ExperimentConfig {
    SpaceKind kind = SpaceKind::circle;
    int resolution = 64;
    Eigen::VectorXd weights;  // finite kind
    Eigen::MatrixXd metric;   // finite kind
    Suite suite = Suite::all;
    std::uint64_t seed = 42;
    std::string out;
    Tolerances tol;
};

ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

DiscreteSpace::Ptr build_space(const ExperimentConfig& config);

// Node count, weight extrema, diameter, hypothesis verdicts for the default
// radius sequence, and whether the algebra has a unit.
std::string describe_space(const ExperimentConfig& config);

}  // namespace kernelalg

#endif
