#include <Eigen/QR>
#include <Eigen/SVD>
#include <cmath>
#include <random>

#include "doctest.h"
#include "wsgreedy/errors.hpp"
#include "wsgreedy/greedy.hpp"
#include "wsgreedy/oracle.hpp"
#include "wsgreedy/regression.hpp"

using namespace wsgreedy;

namespace {

Eigen::MatrixXd random_matrix(int rows, int cols, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = gauss(rng);
    return m;
}

Eigen::MatrixXd columns_of(const Eigen::MatrixXd& x, const std::vector<int>& idx) {
    Eigen::MatrixXd out(x.rows(), static_cast<Eigen::Index>(idx.size()));
    for (std::size_t j = 0; j < idx.size(); ++j)
        out.col(static_cast<Eigen::Index>(j)) = x.col(idx[j]);
    return out;
}

std::vector<int> mask_elements(std::uint32_t mask) {
    std::vector<int> elems;
    for (int i = 0; mask != 0; ++i, mask >>= 1)
        if (mask & 1u) elems.push_back(i);
    return elems;
}

// Independent oracle: f(S) via an explicit pseudo-inverse projection.
double naive_smlr_value(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y,
                        const std::vector<int>& s) {
    if (s.empty()) return y.squaredNorm();
    const Eigen::MatrixXd xs = columns_of(x, s);
    const Eigen::MatrixXd proj = xs * xs.completeOrthogonalDecomposition().solve(y);
    return (y - proj).squaredNorm();
}

RegressionInstance identity_instance() {
    Eigen::MatrixXd x = Eigen::MatrixXd::Identity(2, 2);
    Eigen::MatrixXd y(2, 1);
    y << 3, 4;
    return {x, y};
}

}  // namespace

TEST_CASE("smlr objective on the 2x2 identity example") {
    SmlrObjective f{identity_instance()};
    CHECK(f.evaluate(SolutionSet{}) == 25.0);
    CHECK(f.evaluate(SolutionSet({0})) == doctest::Approx(16.0));
    CHECK(f.evaluate(SolutionSet({1})) == doctest::Approx(9.0));
    CHECK(f.evaluate(SolutionSet({0, 1})) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("a duplicated column has zero gain") {
    Eigen::MatrixXd x(3, 2);
    x << 1, 1, 2, 2, -1, -1;
    Eigen::MatrixXd y(3, 1);
    y << 1, 0, 1;
    SmlrObjective f{RegressionInstance(x, y)};
    const SolutionSet s({0});
    CHECK(f.gain(s, 1) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(f.evaluate(s.with(1)) == doctest::Approx(f.evaluate(s)));
}

TEST_CASE("instance validation") {
    Eigen::MatrixXd x(2, 2);
    x << 1, 0, 0, 0;  // zero column
    Eigen::MatrixXd y(2, 1);
    y << 1, 1;
    CHECK_THROWS_AS(RegressionInstance(x, y), ConfigError);
    Eigen::MatrixXd y3(3, 1);
    y3 << 1, 1, 1;
    CHECK_THROWS_AS(RegressionInstance(Eigen::MatrixXd::Identity(2, 2), y3), ConfigError);
}

TEST_CASE("incremental_gain_scan on the identity example") {
    ResidualState state{identity_instance()};
    const auto best = incremental_gain_scan(state);
    REQUIRE(best.has_value());
    CHECK(best->element == 1);
    CHECK(best->gain == doctest::Approx(16.0));
}

TEST_CASE("incremental_gain_scan signals when all columns are spanned") {
    ResidualState state{identity_instance()};
    state.push(0);
    state.push(1);
    CHECK(!incremental_gain_scan(state).has_value());
}

TEST_CASE("incremental gains equal naive recomputation on random instances") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 10; ++trial) {
        const Eigen::MatrixXd x = random_matrix(6, 6, rng);
        const Eigen::MatrixXd y = random_matrix(6, 2, rng);
        RegressionInstance inst(x, y);
        ResidualState state(inst);
        std::vector<int> selected;
        for (int step = 0; step < 4; ++step) {
            const double fs = state.objective();
            for (int i = 0; i < 6; ++i) {
                if (state.selected(i)) continue;
                auto with_i = selected;
                with_i.push_back(i);
                const double naive =
                    naive_smlr_value(inst.design(), inst.target(), with_i);
                CHECK(state.gain(i) == doctest::Approx(fs - naive).epsilon(1e-8).scale(1.0));
            }
            const auto best = incremental_gain_scan(state);
            REQUIRE(best.has_value());
            state.push(best->element);
            selected.push_back(best->element);
        }
    }
}

TEST_CASE("pythagorean decomposition holds on random instances") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 8; ++trial) {
        const Eigen::MatrixXd x = random_matrix(5, 5, rng);
        const Eigen::MatrixXd y = random_matrix(5, 2, rng);
        RegressionInstance inst(x, y);
        SmlrObjective f{inst};
        const double total = inst.target().squaredNorm();
        for (std::uint32_t mask = 0; mask < 32; ++mask) {
            const auto elems = mask_elements(mask);
            const double fs = f.evaluate(SolutionSet(elems));
            double proj_sq = 0.0;
            if (!elems.empty()) {
                const Eigen::MatrixXd xs = columns_of(inst.design(), elems);
                proj_sq = (xs * xs.completeOrthogonalDecomposition().solve(inst.target()))
                              .squaredNorm();
            }
            CHECK(fs + proj_sq == doctest::Approx(total).epsilon(1e-8));
        }
    }
}

TEST_CASE("alpha_exact on simple designs") {
    SUBCASE("orthonormal design gives alpha 1") {
        RegressionInstance inst(Eigen::MatrixXd::Identity(4, 4), Eigen::MatrixXd::Ones(4, 1));
        CHECK(alpha_exact(inst, 4).alpha == doctest::Approx(1.0));
    }
    SUBCASE("identical columns stay finite via the nonzero-singular-value convention") {
        Eigen::MatrixXd x(3, 2);
        x << 1, 1, 1, 1, 1, 1;
        RegressionInstance inst(x, Eigen::MatrixXd::Ones(3, 1));
        const auto cert = alpha_exact(inst, 2);
        CHECK(std::isfinite(cert.alpha));
        CHECK(cert.alpha >= 1.0);
    }
}

TEST_CASE("alpha_exact matches an independent subset enumeration") {
    std::mt19937_64 rng(43);
    const Eigen::MatrixXd x = random_matrix(5, 5, rng);
    RegressionInstance inst(x, Eigen::MatrixXd::Ones(5, 1));
    // Independent route: explicit pseudo-inverse per subset, spectral norm by SVD.
    double expected = 1.0;
    for (std::uint32_t mask = 1; mask < 32; ++mask) {
        const Eigen::MatrixXd xs = columns_of(inst.design(), mask_elements(mask));
        const Eigen::MatrixXd pinv = xs.completeOrthogonalDecomposition().pseudoInverse();
        const double norm = Eigen::JacobiSVD<Eigen::MatrixXd>(pinv).singularValues()[0];
        expected = std::max(expected, norm * norm);
    }
    CHECK(alpha_exact(inst, 5).alpha == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("alpha_exact refuses enumerations above the guard") {
    RegressionInstance inst(Eigen::MatrixXd::Identity(8, 8), Eigen::MatrixXd::Ones(8, 1));
    CHECK_THROWS_AS(alpha_exact(inst, 8, 10), GuardError);
}

TEST_CASE("alpha_spectral_bound") {
    SUBCASE("orthonormal design") {
        RegressionInstance inst(Eigen::MatrixXd::Identity(3, 3), Eigen::MatrixXd::Ones(3, 1));
        CHECK(alpha_spectral_bound(inst).alpha == doctest::Approx(1.0));
    }
    SUBCASE("2x2 closed form at theta = pi/3") {
        const double theta = M_PI / 3.0;
        Eigen::MatrixXd x(2, 2);
        x << 1, std::cos(theta), 0, std::sin(theta);
        RegressionInstance inst(x, Eigen::MatrixXd::Ones(2, 1));
        // Gram matrix eigenvalues are 1 +- cos(theta); sigma_min^2 = 1 - cos(theta).
        CHECK(alpha_spectral_bound(inst).alpha ==
              doctest::Approx(1.0 / (1.0 - std::cos(theta))).epsilon(1e-12));
    }
    SUBCASE("wide design is rank deficient") {
        Eigen::MatrixXd x(2, 3);
        x << 1, 0, 1, 0, 1, 1;
        RegressionInstance inst(x, Eigen::MatrixXd::Ones(2, 1));
        CHECK_THROWS_AS(alpha_spectral_bound(inst), ConfigError);
    }
}

TEST_CASE("spectral bound dominates exact alpha on full-rank designs") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 8; ++trial) {
        RegressionInstance inst(random_matrix(7, 4, rng), Eigen::MatrixXd::Ones(7, 1));
        CHECK(alpha_spectral_bound(inst).alpha >= alpha_exact(inst, 4).alpha - 1e-9);
    }
}

TEST_CASE("weak supermodularity holds exhaustively with exact alpha") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 6; ++trial) {
        const int n = 5;
        RegressionInstance inst(random_matrix(6, n, rng), random_matrix(6, 2, rng));
        SmlrObjective f{inst};
        const double alpha = alpha_exact(inst, n).alpha;
        CHECK(verify_weak_supermodularity(f, alpha, n).verified);
        CHECK(estimate_alpha_empirical(f, n) <= alpha + 1e-9);
    }
}

TEST_CASE("transition bound: projected-column pseudo-inverse norms") {
    std::mt19937_64 rng(71);
    const int n = 5;
    RegressionInstance inst(random_matrix(6, n, rng), Eigen::MatrixXd::Ones(6, 1));
    const Eigen::MatrixXd& x = inst.design();
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        for (std::uint32_t t = 1; t < (1u << n); ++t) {
            const std::uint32_t diff = t & ~s;
            if (diff == 0) continue;
            const auto s_elems = mask_elements(s);
            Eigen::MatrixXd z(x.rows(), 0);
            for (int i : mask_elements(diff)) {
                Eigen::VectorXd r = x.col(i);
                if (!s_elems.empty()) {
                    const Eigen::MatrixXd xs = columns_of(x, s_elems);
                    r -= xs * xs.completeOrthogonalDecomposition().solve(x.col(i));
                }
                const double zeta = r.norm();
                if (zeta < 1e-10) continue;
                z.conservativeResize(Eigen::NoChange, z.cols() + 1);
                z.col(z.cols() - 1) = r / zeta;
            }
            if (z.cols() == 0) continue;
            const auto union_elems = mask_elements(s | t);
            CHECK(pseudo_inverse_norm(z) <=
                  pseudo_inverse_norm(columns_of(x, union_elems)) + 1e-9);
        }
    }
}

TEST_CASE("pushing a spanned column does not change the objective") {
    Eigen::MatrixXd x(4, 3);
    x << 1, 2, 0, 1, 2, 1, 1, 2, 0, 1, 2, 1;  // column 1 is parallel to column 0
    Eigen::MatrixXd y(4, 1);
    y << 1, 2, 3, 4;
    RegressionInstance inst(x, y);
    ResidualState state(inst);
    state.push(0);
    CHECK(state.spanned(1));
    const double before = state.objective();
    state.push(1);
    CHECK(state.objective() == doctest::Approx(before).epsilon(1e-12));
}

TEST_CASE("css objective") {
    SUBCASE("orthonormal X gives f = n - |S|") {
        const auto f = css_objective(Eigen::MatrixXd::Identity(4, 4));
        CHECK(f.evaluate(SolutionSet{}) == doctest::Approx(4.0));
        CHECK(f.evaluate(SolutionSet({1})) == doctest::Approx(3.0));
        CHECK(f.evaluate(SolutionSet({0, 2, 3})) == doctest::Approx(1.0));
    }
    SUBCASE("rank-one matrix is captured by any single column") {
        Eigen::MatrixXd x(3, 3);
        x.col(0) << 1, 2, 3;
        x.col(1) = 2.0 * x.col(0);
        x.col(2) = -0.5 * x.col(0);
        const auto f = css_objective(x);
        for (int i = 0; i < 3; ++i)
            CHECK(f.evaluate(SolutionSet({i})) == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("k=2 brute force matches a direct pair enumeration") {
        std::mt19937_64 rng(83);
        const Eigen::MatrixXd x = random_matrix(5, 4, rng);
        const auto f = css_objective(x);
        const auto oracle = brute_force_min(f, 2, 4);
        double direct = f.evaluate(SolutionSet({0}));
        for (int a = 0; a < 4; ++a)
            for (int b = a; b < 4; ++b) {
                const SolutionSet s = (a == b) ? SolutionSet({a}) : SolutionSet({a, b});
                direct = std::min(direct, f.evaluate(s));
            }
        CHECK(oracle.optimum_value == doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("sparse_regress on a planted orthonormal instance") {
    Eigen::MatrixXd x = Eigen::MatrixXd::Identity(8, 8);
    Eigen::VectorXd y = Eigen::VectorXd::Zero(8);
    y[2] = 3.0;
    y[5] = 0.05;  // small off-support component
    RegressionInstance inst(x, y);
    const auto report = sparse_regress(inst, 0.02);
    CHECK(report.result.solution.contains(2));
    CHECK(report.achieved_value <= 0.02);
    CHECK(report.k == 1);  // {2} alone achieves E/4
    CHECK(static_cast<int>(report.result.solution.size()) <= report.size_bound);
    CHECK(report.size_bound <= report.natarajan_bound);
    CHECK(report.coefficients[2] == doctest::Approx(3.0));
}

TEST_CASE("sparse_regress degenerate targets") {
    Eigen::MatrixXd x = Eigen::MatrixXd::Identity(3, 3);
    SUBCASE("zero target selects nothing") {
        RegressionInstance inst(x, Eigen::VectorXd::Zero(3));
        const auto report = sparse_regress(inst, 0.5);
        CHECK(report.result.solution.empty());
        CHECK(report.result.trace.steps.empty());
    }
    SUBCASE("target error above the initial value selects nothing") {
        Eigen::VectorXd y(3);
        y << 1, 1, 1;
        RegressionInstance inst(x, y);
        const auto report = sparse_regress(inst, 10.0);
        CHECK(report.result.solution.empty());
    }
    SUBCASE("multi-column targets are rejected") {
        RegressionInstance inst(x, Eigen::MatrixXd::Ones(3, 2));
        CHECK_THROWS_AS(sparse_regress(inst, 0.5), ConfigError);
    }
}
