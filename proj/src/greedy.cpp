#include "wsgreedy/greedy.hpp"

#include <cmath>
#include <limits>

#include "wsgreedy/errors.hpp"

namespace wsgreedy {

std::string to_string(StopReason r) {
    switch (r) {
        case StopReason::BudgetExhausted: return "budget_exhausted";
        case StopReason::ReachedTarget: return "reached_target";
        case StopReason::GroundExhausted: return "ground_exhausted";
        case StopReason::ReachedZero: return "reached_zero";
        case StopReason::Stalled: return "stalled";
    }
    return "unknown";
}

int iteration_budget(double alpha, int k, double f_initial, double target_error) {
    if (alpha < 1.0) throw ConfigError("alpha must be >= 1");
    if (k < 1) throw ConfigError("k must be >= 1");
    if (!(f_initial > 0.0) || !std::isfinite(f_initial))
        throw ConfigError("f_initial must be positive and finite");
    if (!(target_error > 0.0)) throw ConfigError("target_error must be positive");
    if (f_initial <= target_error) return 0;
    return static_cast<int>(std::ceil(alpha * k * std::log(f_initial / target_error)));
}

namespace {

CandidateValue scan_best(const SetObjective& f, const SolutionSet& s, const GreedyOptions& opts,
                         double* max_discrepancy) {
    const auto candidates = f.extension_values(s);
    if (candidates.empty())
        throw ConfigError("greedy step on an exhausted ground set");
    CandidateValue best = candidates.front();
    for (const auto& c : candidates) {
        if (c.value < best.value) best = c;  // ascending order makes ties pick the lowest index
    }
    if (opts.check_gains && max_discrepancy != nullptr) {
        for (const auto& c : candidates) {
            const double naive = f.evaluate(s.with(c.element));
            const double d = std::abs(naive - c.value);
            if (d > *max_discrepancy) *max_discrepancy = d;
        }
    }
    return best;
}

}  // namespace

CandidateValue greedy_step(const SetObjective& f, const SolutionSet& s, const GreedyOptions& opts) {
    return scan_best(f, s, opts, nullptr);
}

GreedyResult greedy_extend(const SetObjective& f, const SolutionSet& s0, const GreedyBudget& budget,
                           const GreedyOptions& opts) {
    const double f0 = f.evaluate(s0);
    if (std::isinf(f0))
        throw ConfigError("f(S0) is infinite; start the run from a non-empty warm start");

    GreedyResult out;
    out.solution = s0;
    out.trace.initial_value = f0;
    out.stop_reason = StopReason::BudgetExhausted;

    if (f0 <= budget.target_error) {
        out.stop_reason = StopReason::ReachedTarget;
        return out;
    }
    const int steps = iteration_budget(budget.alpha, budget.k, f0, budget.target_error);
    for (int t = 1; t <= steps; ++t) {
        if (out.solution.size() == static_cast<std::size_t>(f.ground_size())) {
            out.stop_reason = StopReason::GroundExhausted;
            return out;
        }
        const auto step = scan_best(f, out.solution, opts, &out.trace.max_gain_discrepancy);
        out.solution.add(step.element);
        out.trace.steps.push_back({t, step.element, step.value});
        if (step.value <= 0.0) {
            out.stop_reason = StopReason::ReachedZero;
            return out;
        }
    }
    return out;
}

GreedyResult greedy_extend_until(const SetObjective& f, const SolutionSet& s0, double f_stop,
                                 int max_steps, const GreedyOptions& opts) {
    if (f_stop < 0.0) throw ConfigError("f_stop must be non-negative");
    if (max_steps < 1) throw ConfigError("max_steps must be >= 1");

    GreedyResult out;
    out.solution = s0;
    const double f0 = f.evaluate(s0);
    out.trace.initial_value = f0;
    if (f0 <= f_stop + opts.tolerance) {
        out.stop_reason = StopReason::ReachedTarget;
        return out;
    }
    double current = f0;
    for (int t = 1; t <= max_steps; ++t) {
        if (out.solution.size() == static_cast<std::size_t>(f.ground_size())) {
            out.stop_reason = StopReason::GroundExhausted;
            return out;
        }
        const auto step = scan_best(f, out.solution, opts, &out.trace.max_gain_discrepancy);
        if (step.value >= current - opts.tolerance) {
            out.stop_reason = StopReason::Stalled;
            return out;
        }
        out.solution.add(step.element);
        out.trace.steps.push_back({t, step.element, step.value});
        current = step.value;
        if (current <= f_stop + opts.tolerance) {
            out.stop_reason = StopReason::ReachedTarget;
            return out;
        }
    }
    out.stop_reason = StopReason::BudgetExhausted;
    return out;
}

GreedyResult bicriteria_solve(const SetObjective& f, const Initializer& init, double rho, int k,
                              double alpha, double epsilon, const GreedyOptions& opts) {
    if (rho < 1.0) throw ConfigError("rho must be >= 1");
    if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");

    const SolutionSet s0 = init(f, k);
    const double f0 = f.evaluate(s0);
    if (f0 <= 0.0) {
        GreedyResult out;
        out.solution = s0;
        out.trace.initial_value = f0;
        out.stop_reason = StopReason::ReachedZero;
        return out;
    }
    // E = eps * f(S0) / rho gives budget ceil(alpha*k*ln(rho/eps)) and
    // additive error at most eps * f(S*).
    GreedyBudget budget{alpha, k, epsilon * f0 / rho};
    return greedy_extend(f, s0, budget, opts);
}

}  // namespace wsgreedy
