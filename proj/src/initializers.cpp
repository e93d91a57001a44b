#include "wsgreedy/initializers.hpp"

#include <cmath>
#include <limits>

#include "wsgreedy/errors.hpp"
#include "wsgreedy/greedy.hpp"

namespace wsgreedy {

int SeededRng::uniform_index(int n) {
    std::uniform_int_distribution<int> dist(0, n - 1);
    return dist(engine_);
}

InitializerResult d2_adaptive_sample(const Eigen::MatrixXd& points, int k, double beta,
                                     SeededRng& rng, double claimed_rho) {
    if (k < 1) throw ConfigError("k must be >= 1");
    if (beta < 1.0) throw ConfigError("beta must be >= 1");
    const int m = static_cast<int>(points.rows());
    const int count = static_cast<int>(std::ceil(beta * k));
    if (count > m)
        throw ConfigError("d2 sampling needs at least " + std::to_string(count) + " points, have " +
                          std::to_string(m));

    InitializerResult out;
    out.method = "d2";
    out.claimed_rho = claimed_rho;

    const int first = rng.uniform_index(m);
    out.solution.add(first);

    Eigen::VectorXd d2(m);
    for (int i = 0; i < m; ++i) d2[i] = (points.row(i) - points.row(first)).squaredNorm();

    while (static_cast<int>(out.solution.size()) < count) {
        const double total = d2.sum();
        if (total <= 0.0) break;  // every point coincides with a chosen center
        double u = rng.uniform01() * total;
        int chosen = -1;
        for (int i = 0; i < m; ++i) {
            if (d2[i] <= 0.0) continue;
            u -= d2[i];
            if (u <= 0.0) {
                chosen = i;
                break;
            }
        }
        if (chosen < 0) {  // numerical leftover; take the last positive-mass point
            for (int i = m - 1; i >= 0; --i)
                if (d2[i] > 0.0) {
                    chosen = i;
                    break;
                }
        }
        out.solution.add(chosen);
        for (int i = 0; i < m; ++i)
            d2[i] = std::min(d2[i], (points.row(i) - points.row(chosen)).squaredNorm());
    }
    return out;
}

InitializerResult greedy_init(const SetObjective& f, int k, bool rho_certified) {
    if (k < 1) throw ConfigError("k must be >= 1");

    InitializerResult out;
    out.method = rho_certified ? "greedy" : "greedy(rho unverified)";
    out.claimed_rho = static_cast<double>(k) + 1.0;

    double current = std::numeric_limits<double>::infinity();
    for (int t = 0; t < k; ++t) {
        if (out.solution.size() == static_cast<std::size_t>(f.ground_size())) break;
        const auto step = greedy_step(f, out.solution);
        if (!out.solution.empty() && step.value >= current) {
            if (current > 0.0)
                throw StallError("greedy_init: no element improves the objective at size " +
                                 std::to_string(out.solution.size()));
            break;  // objective already at zero
        }
        out.solution.add(step.element);
        current = step.value;
        if (current <= 0.0) break;
    }
    return out;
}

}  // namespace wsgreedy
