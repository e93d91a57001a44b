#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <string>

#include "wsgreedy/objective.hpp"

namespace wsgreedy {

// Deterministic 64-bit seeded generator; identical seeds reproduce identical
// sampling sequences.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    double uniform01() { return dist_(engine_); }
    // Uniform integer in [0, n).
    int uniform_index(int n);

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
    std::uniform_real_distribution<double> dist_{0.0, 1.0};
};

struct InitializerResult {
    SolutionSet solution;
    double claimed_rho = 1.0;
    std::string method;
};

// D^2 adaptive sampling: ceil(beta * k) points, first uniform, then each with
// probability proportional to its squared distance to the nearest chosen
// point. claimed_rho is a configurable reporting constant, not a certificate.
InitializerResult d2_adaptive_sample(const Eigen::MatrixXd& points, int k, double beta,
                                     SeededRng& rng, double claimed_rho = 20.0);

// k plain greedy steps from the empty set (the first step doubles as
// best-singleton selection for objectives with an infinite empty-set
// sentinel). rho_certified marks objectives where the k+1 guarantee applies
// (column subset selection).
InitializerResult greedy_init(const SetObjective& f, int k, bool rho_certified = false);

}  // namespace wsgreedy
