#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "wsgreedy/greedy.hpp"
#include "wsgreedy/objective.hpp"

namespace wsgreedy {

// Design matrix X (columns normalized to unit length by the constructor,
// original norms recorded) and target matrix Y with matching row count.
class RegressionInstance {
public:
    RegressionInstance(Eigen::MatrixXd design, Eigen::MatrixXd target,
                       double column_norm_tolerance = 1e-12);

    const Eigen::MatrixXd& design() const { return design_; }
    const Eigen::MatrixXd& target() const { return target_; }
    const Eigen::VectorXd& original_column_norms() const { return original_norms_; }

    int rows() const { return static_cast<int>(design_.rows()); }
    int num_columns() const { return static_cast<int>(design_.cols()); }
    int num_targets() const { return static_cast<int>(target_.cols()); }

private:
    Eigen::MatrixXd design_;
    Eigen::MatrixXd target_;
    Eigen::VectorXd original_norms_;
};

// Incrementally maintained projection state for one greedy run: an
// orthonormal basis of the selected columns, every unselected column's
// residual against that basis, and the target's residual.
class ResidualState {
public:
    // Columns with residual norm below this are treated as spanned.
    static constexpr double kSpannedThreshold = 1e-10;

    explicit ResidualState(const RegressionInstance& instance);

    void push(int i);  // add column i to the selection

    double objective() const;  // f(S) = ||Y - X_S X_S^+ Y||_F^2
    bool selected(int i) const { return selected_.contains(i); }
    bool spanned(int i) const { return spanned_[static_cast<std::size_t>(i)]; }
    double residual_norm(int i) const { return zeta_[i]; }  // ζ_i
    // f(S) - f(S ∪ {i}) = ||z_i^T Y||^2; zero for spanned or selected columns.
    double gain(int i) const;

    const SolutionSet& selection() const { return selected_; }
    int num_columns() const { return static_cast<int>(residual_columns_.cols()); }
    const Eigen::MatrixXd& basis() const { return basis_; }

private:
    Eigen::MatrixXd basis_;             // m x r, orthonormal
    Eigen::MatrixXd residual_columns_;  // (I - QQ^T) X, per column
    Eigen::MatrixXd projected_target_;  // (I - QQ^T) Y
    Eigen::VectorXd zeta_;
    std::vector<bool> spanned_;
    SolutionSet selected_;
};

struct GainCandidate {
    int element;
    double gain;  // f(S) - f(S ∪ {element})
};

// Best single-column extension by projected-residual gain; lowest index on
// ties. Empty when every remaining column is spanned (no improvement
// possible).
std::optional<GainCandidate> incremental_gain_scan(const ResidualState& state);

// SMLR objective f(S) = ||Y - X_S X_S^+ Y||_F^2. Candidate scans use the
// incremental residual state; evaluate() is a pure from-scratch computation.
class SmlrObjective final : public SetObjective {
public:
    explicit SmlrObjective(RegressionInstance instance) : instance_(std::move(instance)) {}

    int ground_size() const override { return instance_.num_columns(); }
    double evaluate(const SolutionSet& s) const override;
    std::vector<CandidateValue> extension_values(const SolutionSet& s) const override;

    const RegressionInstance& instance() const { return instance_; }

private:
    ResidualState state_for(const SolutionSet& s) const;
    RegressionInstance instance_;
};

// Column subset selection is SMLR with Y = X.
SmlrObjective css_objective(const Eigen::MatrixXd& x);

enum class AlphaScope { Exact, SubsetSampled, SpectralBound };

std::string to_string(AlphaScope scope);

// Certified weak-supermodularity constant for an SMLR objective.
struct AlphaCertificate {
    double alpha = 1.0;
    AlphaScope scope = AlphaScope::Exact;
    std::string detail;
};

// Exact alpha = max over non-empty subsets S' (|S'| <= max_subset_size) of
// 1 / sigma_min_nonzero(X_{S'})^2. Refuses enumerations above the guard.
AlphaCertificate alpha_exact(const RegressionInstance& instance, int max_subset_size,
                             std::size_t guard = std::size_t{1} << 20);

// alpha = ||X^+||_2^2 = 1/sigma_min(X)^2, valid only for full-column-rank X.
// Throws ConfigError on rank deficiency (including wide matrices).
AlphaCertificate alpha_spectral_bound(const RegressionInstance& instance,
                                      double rank_tolerance = 1e-10);

// max over the given subsets of ||X_S||^+ squared; used as the heuristic
// fallback when exact enumeration is infeasible.
AlphaCertificate alpha_subset_sampled(const RegressionInstance& instance,
                                      const std::vector<std::vector<int>>& subsets);

// Spectral norm of the pseudo-inverse: 1 / smallest nonzero singular value.
// Returns 0 for an all-zero matrix.
double pseudo_inverse_norm(const Eigen::MatrixXd& m);

struct SparseRegressReport {
    GreedyResult result;
    double achieved_value = 0.0;
    AlphaCertificate alpha;
    // Minimal support size achieving f <= E/4 (user supplied or oracle
    // computed); 0 when unknown.
    int k = 0;
    // ceil(k * ||X^+||^2 * (ln(||y||^2 / E) + ln(4/3)))
    int size_bound = 0;
    // ceil(9k * ||X^+||^2 * ln(||y||^2 / E)), reported for comparison only.
    int natarajan_bound = 0;
    // Least-squares coefficients on the selected columns, rescaled to the
    // original (un-normalized) column scaling.
    Eigen::VectorXd coefficients;
};

// Sparse regression (single target column): greedy extension from the empty
// set until f(S) <= target_error. known_k <= 0 means "compute by
// enumeration when feasible".
SparseRegressReport sparse_regress(const RegressionInstance& instance, double target_error,
                                   int known_k = 0, int max_steps = 0,
                                   const GreedyOptions& opts = {});

}  // namespace wsgreedy
