#pragma once

#include <Eigen/Dense>
#include <optional>
#include <utility>

#include "wsgreedy/objective.hpp"

namespace wsgreedy {

// k-median objective over an assignment-cost matrix: rows are data points,
// columns are candidate centers, f(S) = sum_i min_{j in S} w_ij.
// f(empty) is the +infinity sentinel; greedy runs must start from a non-empty
// warm start.
class KMedianObjective final : public SetObjective {
public:
    explicit KMedianObjective(Eigen::MatrixXd costs);

    int ground_size() const override { return static_cast<int>(costs_.cols()); }
    double evaluate(const SolutionSet& s) const override;
    std::vector<CandidateValue> extension_values(const SolutionSet& s) const override;

    const Eigen::MatrixXd& costs() const { return costs_; }

private:
    Eigen::MatrixXd costs_;
};

// Constrained k-means: centers chosen from the data points themselves.
// Equivalent to k-median on the pairwise squared-distance matrix.
KMedianObjective kmeans_constrained_objective(const Eigen::MatrixXd& points);

// Pairwise squared Euclidean distances, rows and columns indexed by points.
Eigen::MatrixXd squared_distance_matrix(const Eigen::MatrixXd& points);

struct SupermodularityReport {
    bool holds = true;
    // Violating pair (S, T) as element lists when holds == false.
    std::optional<std::pair<std::vector<int>, std::vector<int>>> witness;
};

// Exhaustively checks f(S∩T) + f(S∪T) >= f(S) + f(T) over all pairs of
// non-empty subsets of {0..n-1}. Refuses n above the exhaustion limit.
SupermodularityReport verify_supermodular(const SetObjective& f, int n, double tol = 1e-9,
                                          int max_n = 12);

}  // namespace wsgreedy
