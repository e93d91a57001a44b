#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wsgreedy/objective.hpp"
#include "wsgreedy/solution.hpp"

namespace wsgreedy {

struct OracleReport {
    double optimum_value = 0.0;
    SolutionSet optimum_set;
    std::uint64_t enumerated_count = 0;
    bool verified = true;
    std::optional<std::pair<std::vector<int>, std::vector<int>>> witness;
};

// Exact minimum of f over all non-empty S with |S| <= k (the empty set is
// included only when f(empty) is finite); lowest-lexicographic optimum on
// ties. Refuses enumerations above the guard.
OracleReport brute_force_min(const SetObjective& f, int k, int n,
                             std::uint64_t guard = std::uint64_t{1} << 22);

// Exhaustive check of f(S) - f(S∪T) <= alpha * |T\S| * max_i gain over all
// ordered pairs of non-empty subsets with T\S nonempty.
OracleReport verify_weak_supermodularity(const SetObjective& f, double alpha, int n,
                                         double tol = 1e-9, int max_n = 10);

// Smallest alpha satisfying the weak-supermodularity inequality over all
// pairs with positive best single-element gain; 1 when no such pair exists.
double estimate_alpha_empirical(const SetObjective& f, int n, int max_n = 10);

// Exact curvature c = 1 - min_j min_{S,T ⊆ [n]\{j}} gain(S,j)/gain(T,j),
// zero-denominator pairs skipped. Empty when every denominator vanishes.
std::optional<double> estimate_curvature(const SetObjective& f, int n, int max_n = 8,
                                         double denom_tol = 1e-12);

}  // namespace wsgreedy
