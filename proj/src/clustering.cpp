#include "wsgreedy/clustering.hpp"

#include <cmath>
#include <limits>

#include "wsgreedy/errors.hpp"

namespace wsgreedy {

KMedianObjective::KMedianObjective(Eigen::MatrixXd costs) : costs_(std::move(costs)) {
    if (costs_.rows() < 1 || costs_.cols() < 1)
        throw ConfigError("cost matrix needs at least one row and one column");
    if ((costs_.array() < 0.0).any()) throw ConfigError("assignment costs must be non-negative");
    if (!costs_.allFinite()) throw ConfigError("assignment costs must be finite");
}

double KMedianObjective::evaluate(const SolutionSet& s) const {
    if (s.empty()) return std::numeric_limits<double>::infinity();
    double total = 0.0;
    for (Eigen::Index i = 0; i < costs_.rows(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (int j : s.elements()) best = std::min(best, costs_(i, j));
        total += best;
    }
    return total;
}

std::vector<CandidateValue> KMedianObjective::extension_values(const SolutionSet& s) const {
    // Row-wise mins under the current S, then one column scan per candidate.
    Eigen::VectorXd mins = Eigen::VectorXd::Constant(costs_.rows(),
                                                     std::numeric_limits<double>::infinity());
    for (int j : s.elements()) mins = mins.cwiseMin(costs_.col(j));

    std::vector<CandidateValue> out;
    for (int j = 0; j < ground_size(); ++j) {
        if (s.contains(j)) continue;
        out.push_back({j, mins.cwiseMin(costs_.col(j)).sum()});
    }
    return out;
}

Eigen::MatrixXd squared_distance_matrix(const Eigen::MatrixXd& points) {
    const Eigen::Index m = points.rows();
    Eigen::MatrixXd d2(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j)
            d2(i, j) = (points.row(i) - points.row(j)).squaredNorm();
    return d2;
}

KMedianObjective kmeans_constrained_objective(const Eigen::MatrixXd& points) {
    if (points.rows() < 1 || points.cols() < 1)
        throw ConfigError("point set needs at least one point and one dimension");
    if (!points.allFinite()) throw ConfigError("point coordinates must be finite");
    return KMedianObjective(squared_distance_matrix(points));
}

SupermodularityReport verify_supermodular(const SetObjective& f, int n, double tol, int max_n) {
    if (n > max_n)
        throw GuardError("verify_supermodular refuses n=" + std::to_string(n) + " (limit " +
                         std::to_string(max_n) + ")");

    const std::uint32_t full = (n >= 32) ? 0 : (1u << n);
    std::vector<double> value(full, 0.0);
    auto mask_set = [](std::uint32_t mask) {
        std::vector<int> elems;
        for (int i = 0; mask != 0; ++i, mask >>= 1)
            if (mask & 1u) elems.push_back(i);
        return elems;
    };
    for (std::uint32_t m = 0; m < full; ++m) value[m] = f.evaluate(SolutionSet(mask_set(m)));

    for (std::uint32_t s = 1; s < full; ++s) {
        for (std::uint32_t t = 1; t < full; ++t) {
            const double lhs = value[s & t] + value[s | t];
            const double rhs = value[s] + value[t];
            if (std::isinf(lhs)) continue;  // empty-intersection sentinel
            if (lhs < rhs - tol) return {false, {{mask_set(s), mask_set(t)}}};
        }
    }
    return {true, std::nullopt};
}

}  // namespace wsgreedy
