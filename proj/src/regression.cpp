#include "wsgreedy/regression.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <limits>

#include "wsgreedy/errors.hpp"

namespace wsgreedy {

RegressionInstance::RegressionInstance(Eigen::MatrixXd design, Eigen::MatrixXd target,
                                       double column_norm_tolerance) {
    if (design.rows() < 1 || design.cols() < 1) throw ConfigError("design matrix is empty");
    if (target.rows() != design.rows())
        throw ConfigError("design and target row counts differ: " + std::to_string(design.rows()) +
                          " vs " + std::to_string(target.rows()));
    if (!design.allFinite() || !target.allFinite())
        throw ConfigError("matrix entries must be finite");

    original_norms_ = design.colwise().norm();
    for (Eigen::Index j = 0; j < design.cols(); ++j) {
        if (original_norms_[j] <= column_norm_tolerance)
            throw ConfigError("design column " + std::to_string(j) + " has zero norm");
        design.col(j) /= original_norms_[j];
    }
    design_ = std::move(design);
    target_ = std::move(target);
}

ResidualState::ResidualState(const RegressionInstance& instance)
    : basis_(instance.rows(), 0),
      residual_columns_(instance.design()),
      projected_target_(instance.target()),
      zeta_(instance.design().colwise().norm()),
      spanned_(static_cast<std::size_t>(instance.num_columns()), false) {
    for (int j = 0; j < num_columns(); ++j)
        if (zeta_[j] < kSpannedThreshold) spanned_[static_cast<std::size_t>(j)] = true;
}

void ResidualState::push(int i) {
    if (i < 0 || i >= num_columns()) throw ConfigError("column index out of range");
    if (selected_.contains(i)) throw ConfigError("column already selected");
    selected_.add(i);
    if (spanned_[static_cast<std::size_t>(i)]) return;  // no-op: adds nothing to the span

    Eigen::VectorXd v = residual_columns_.col(i);
    if (basis_.cols() > 0) v -= basis_ * (basis_.transpose() * v);  // reorthogonalization pass
    const double norm = v.norm();
    zeta_[i] = 0.0;
    residual_columns_.col(i).setZero();
    if (norm < kSpannedThreshold) {
        spanned_[static_cast<std::size_t>(i)] = true;
        return;
    }
    const Eigen::VectorXd q = v / norm;
    basis_.conservativeResize(Eigen::NoChange, basis_.cols() + 1);
    basis_.col(basis_.cols() - 1) = q;

    projected_target_ -= q * (q.transpose() * projected_target_);
    for (int j = 0; j < num_columns(); ++j) {
        if (selected_.contains(j) || spanned_[static_cast<std::size_t>(j)]) continue;
        residual_columns_.col(j) -= q * q.dot(residual_columns_.col(j));
        zeta_[j] = residual_columns_.col(j).norm();
        if (zeta_[j] < kSpannedThreshold) spanned_[static_cast<std::size_t>(j)] = true;
    }
}

double ResidualState::objective() const { return projected_target_.squaredNorm(); }

double ResidualState::gain(int i) const {
    if (selected_.contains(i) || spanned_[static_cast<std::size_t>(i)]) return 0.0;
    return (residual_columns_.col(i).transpose() * projected_target_).squaredNorm() /
           (zeta_[i] * zeta_[i]);
}

std::optional<GainCandidate> incremental_gain_scan(const ResidualState& state) {
    std::optional<GainCandidate> best;
    for (int i = 0; i < state.num_columns(); ++i) {
        if (state.selected(i) || state.spanned(i)) continue;
        const double g = state.gain(i);
        if (!best || g > best->gain) best = GainCandidate{i, g};
    }
    return best;
}

ResidualState SmlrObjective::state_for(const SolutionSet& s) const {
    ResidualState state(instance_);
    for (int i : s.elements()) state.push(i);
    return state;
}

double SmlrObjective::evaluate(const SolutionSet& s) const { return state_for(s).objective(); }

std::vector<CandidateValue> SmlrObjective::extension_values(const SolutionSet& s) const {
    const ResidualState state = state_for(s);
    const double fs = state.objective();
    std::vector<CandidateValue> out;
    for (int i = 0; i < ground_size(); ++i) {
        if (s.contains(i)) continue;
        out.push_back({i, std::max(0.0, fs - state.gain(i))});
    }
    return out;
}

SmlrObjective css_objective(const Eigen::MatrixXd& x) {
    RegressionInstance inst(x, x);
    // The target must match the normalized design, otherwise f(full set) != 0.
    return SmlrObjective(RegressionInstance(x, inst.design()));
}

std::string to_string(AlphaScope scope) {
    switch (scope) {
        case AlphaScope::Exact: return "exact";
        case AlphaScope::SubsetSampled: return "subset-sampled";
        case AlphaScope::SpectralBound: return "spectral-bound";
    }
    return "unknown";
}

double pseudo_inverse_norm(const Eigen::MatrixXd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0.0;
    const double cutoff =
        sv[0] * std::max(m.rows(), m.cols()) * std::numeric_limits<double>::epsilon();
    double smallest = 0.0;
    for (Eigen::Index i = sv.size() - 1; i >= 0; --i) {
        if (sv[i] > cutoff) {
            smallest = sv[i];
            break;
        }
    }
    return smallest > 0.0 ? 1.0 / smallest : 0.0;
}

namespace {

// Visits all subsets of {0..n-1} with 1 <= size <= max_size.
template <typename Fn>
void for_each_subset(int n, int max_size, Fn&& fn) {
    std::vector<int> combo;
    auto recurse = [&](auto&& self, int start) -> void {
        if (!combo.empty()) fn(combo);
        if (static_cast<int>(combo.size()) == max_size) return;
        for (int i = start; i < n; ++i) {
            combo.push_back(i);
            self(self, i + 1);
            combo.pop_back();
        }
    };
    recurse(recurse, 0);
}

std::uint64_t subset_count(int n, int max_size) {
    std::uint64_t total = 0;
    std::uint64_t binom = 1;
    for (int j = 1; j <= std::min(n, max_size); ++j) {
        binom = binom * static_cast<std::uint64_t>(n - j + 1) / static_cast<std::uint64_t>(j);
        total += binom;
        if (total > (std::uint64_t{1} << 40)) break;  // avoid overflow, caller guards anyway
    }
    return total;
}

Eigen::MatrixXd columns(const Eigen::MatrixXd& x, const std::vector<int>& idx) {
    Eigen::MatrixXd out(x.rows(), static_cast<Eigen::Index>(idx.size()));
    for (std::size_t j = 0; j < idx.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = x.col(idx[j]);
    return out;
}

}  // namespace

AlphaCertificate alpha_exact(const RegressionInstance& instance, int max_subset_size,
                             std::size_t guard) {
    const int n = instance.num_columns();
    if (max_subset_size < 1) throw ConfigError("max_subset_size must be >= 1");
    max_subset_size = std::min(max_subset_size, n);
    if (subset_count(n, max_subset_size) > guard)
        throw GuardError("alpha_exact enumeration exceeds the guard of " + std::to_string(guard) +
                         " subsets");

    double best = 1.0;
    for_each_subset(n, max_subset_size, [&](const std::vector<int>& s) {
        const double norm = pseudo_inverse_norm(columns(instance.design(), s));
        best = std::max(best, norm * norm);
    });
    return {best, AlphaScope::Exact,
            "max over all non-empty subsets up to size " + std::to_string(max_subset_size)};
}

AlphaCertificate alpha_spectral_bound(const RegressionInstance& instance, double rank_tolerance) {
    const Eigen::MatrixXd& x = instance.design();
    if (x.rows() < x.cols())
        throw ConfigError("spectral alpha bound requires full column rank; matrix is wide");
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(x);
    const double sigma_min = svd.singularValues()[svd.singularValues().size() - 1];
    if (sigma_min <= rank_tolerance)
        throw ConfigError("spectral alpha bound requires full column rank; sigma_min = " +
                          std::to_string(sigma_min));
    return {std::max(1.0, 1.0 / (sigma_min * sigma_min)), AlphaScope::SpectralBound,
            "1/sigma_min(X)^2 for full-column-rank X"};
}

AlphaCertificate alpha_subset_sampled(const RegressionInstance& instance,
                                      const std::vector<std::vector<int>>& subsets) {
    double best = 1.0;
    for (const auto& s : subsets) {
        if (s.empty()) continue;
        const double norm = pseudo_inverse_norm(columns(instance.design(), s));
        best = std::max(best, norm * norm);
    }
    return {best, AlphaScope::SubsetSampled,
            "max over " + std::to_string(subsets.size()) + " sampled subsets; heuristic guarantee"};
}

SparseRegressReport sparse_regress(const RegressionInstance& instance, double target_error,
                                   int known_k, int max_steps, const GreedyOptions& opts) {
    if (instance.num_targets() != 1)
        throw ConfigError("sparse_regress expects a single target column");
    if (!(target_error > 0.0)) throw ConfigError("target_error must be positive");

    const int n = instance.num_columns();
    if (max_steps <= 0) max_steps = n;
    SmlrObjective f(instance);

    SparseRegressReport report;
    report.result = greedy_extend_until(f, SolutionSet{}, target_error, max_steps, opts);
    report.achieved_value = f.evaluate(report.result.solution);

    // Certify alpha: spectral when X has full column rank, else exact when the
    // enumeration fits the guard, else sample the subsets this run visited.
    try {
        report.alpha = alpha_spectral_bound(instance);
    } catch (const ConfigError&) {
        try {
            report.alpha = alpha_exact(instance, n);
        } catch (const GuardError&) {
            std::vector<std::vector<int>> prefixes;
            std::vector<int> prefix;
            for (int e : report.result.solution.elements()) {
                prefix.push_back(e);
                prefixes.push_back(prefix);
            }
            report.alpha = alpha_subset_sampled(instance, prefixes);
        }
    }

    // Minimal support achieving f <= E/4, by enumeration when not supplied.
    report.k = known_k;
    if (report.k <= 0 && subset_count(n, n) <= (std::uint64_t{1} << 20)) {
        const double quarter = target_error / 4.0;
        for (int size = 1; size <= n && report.k <= 0; ++size) {
            bool found = false;
            for_each_subset(n, size, [&](const std::vector<int>& s) {
                if (found || static_cast<int>(s.size()) != size) return;
                if (f.evaluate(SolutionSet(s)) <= quarter) found = true;
            });
            if (found) report.k = size;
        }
    }

    const double y_sq = instance.target().squaredNorm();
    if (report.k > 0 && y_sq > target_error) {
        const double xp = pseudo_inverse_norm(instance.design());
        const double log_term = std::log(y_sq / target_error);
        report.size_bound =
            static_cast<int>(std::ceil(report.k * xp * xp * (log_term + std::log(4.0 / 3.0))));
        report.natarajan_bound = static_cast<int>(std::ceil(9.0 * report.k * xp * xp * log_term));
    }

    // Least-squares coefficients on the selected columns, in the original
    // (pre-normalization) column scaling.
    report.coefficients = Eigen::VectorXd::Zero(n);
    const auto& sel = report.result.solution.elements();
    if (!sel.empty()) {
        const Eigen::MatrixXd xs = columns(instance.design(), sel);
        const Eigen::VectorXd w =
            xs.completeOrthogonalDecomposition().solve(instance.target().col(0));
        for (std::size_t j = 0; j < sel.size(); ++j)
            report.coefficients[sel[j]] =
                w[static_cast<Eigen::Index>(j)] / instance.original_column_norms()[sel[j]];
    }
    return report;
}

}  // namespace wsgreedy
