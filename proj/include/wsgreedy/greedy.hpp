#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wsgreedy/objective.hpp"
#include "wsgreedy/solution.hpp"

namespace wsgreedy {

// Parameters of one greedy extension run: the weak-supermodularity constant,
// the cardinality of the comparison optimum, and the additive error target E.
struct GreedyBudget {
    double alpha = 1.0;
    int k = 1;
    double target_error = 1.0;
};

struct TraceStep {
    int iteration;  // 1-based
    int element;
    double value;  // f(S_t) after adding the element
};

// Auditable record of a greedy run.
struct GreedyTrace {
    double initial_value = 0.0;
    std::vector<TraceStep> steps;

    // Largest |incremental - from-scratch| gain discrepancy seen, only
    // populated when GreedyOptions::check_gains is set.
    double max_gain_discrepancy = 0.0;
};

enum class StopReason {
    BudgetExhausted,
    ReachedTarget,
    GroundExhausted,
    ReachedZero,
    Stalled,
};

std::string to_string(StopReason r);

struct GreedyOptions {
    // Cross-check every candidate value against a from-scratch recomputation
    // and record the worst discrepancy in the trace.
    bool check_gains = false;
    // Absolute tolerance for stopping-rule and stall comparisons.
    double tolerance = 1e-12;
};

struct GreedyResult {
    SolutionSet solution;
    GreedyTrace trace;
    StopReason stop_reason = StopReason::BudgetExhausted;
};

// ceil(alpha * k * ln(f_initial / target_error)), clamped to 0 when
// f_initial <= target_error.
int iteration_budget(double alpha, int k, double f_initial, double target_error);

// One greedy step: the element outside S minimizing f(S ∪ {i}), lowest index
// on ties. Throws StallError-free; throws ConfigError when S is the full
// ground set.
CandidateValue greedy_step(const SetObjective& f, const SolutionSet& s,
                           const GreedyOptions& opts = {});

// Runs the fixed-budget greedy extension from S0 with the budget derived from
// f(S0), alpha, k and E. Stops early only on an exactly-zero objective or
// ground-set exhaustion.
GreedyResult greedy_extend(const SetObjective& f, const SolutionSet& s0,
                           const GreedyBudget& budget, const GreedyOptions& opts = {});

// Greedy extension with a value-based stopping rule: stops at the first
// f(S_t) <= f_stop, after max_steps, on exhaustion, or when no candidate
// improves the objective.
GreedyResult greedy_extend_until(const SetObjective& f, const SolutionSet& s0, double f_stop,
                                 int max_steps, const GreedyOptions& opts = {});

using Initializer = std::function<SolutionSet(const SetObjective&, int)>;

// Warm start + greedy extension with target error E = epsilon * f(S0) / rho,
// which makes the iteration budget ceil(alpha * k * ln(rho / epsilon)) and
// the additive error at most epsilon * f(S*) whenever f(S0) <= rho * f(S*).
GreedyResult bicriteria_solve(const SetObjective& f, const Initializer& init, double rho, int k,
                              double alpha, double epsilon, const GreedyOptions& opts = {});

}  // namespace wsgreedy
