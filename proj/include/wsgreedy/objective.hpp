#pragma once

#include <functional>
#include <vector>

#include "wsgreedy/solution.hpp"

namespace wsgreedy {

// Objective value of extending the current solution with one element.
struct CandidateValue {
    int element;
    double value;  // f(S ∪ {element})
};

// Non-negative, monotone non-increasing set function with marginal-gain queries.
// Implementations must be pure: evaluate() is safe to call concurrently.
class SetObjective {
public:
    virtual ~SetObjective() = default;

    virtual int ground_size() const = 0;
    virtual double evaluate(const SolutionSet& s) const = 0;

    // f(S) - f(S ∪ {i}), never negative for a monotone objective.
    double gain(const SolutionSet& s, int i) const;

    // Values f(S ∪ {i}) for every i outside S, in ascending element order.
    // The default recomputes from scratch; implementations with an incremental
    // path (e.g. projected residuals) override this.
    virtual std::vector<CandidateValue> extension_values(const SolutionSet& s) const;
};

// Wraps an arbitrary callback as a SetObjective. Used by verifiers and tests
// that need small synthetic objectives (modular, constant, counterexamples).
class CallbackObjective final : public SetObjective {
public:
    CallbackObjective(int n, std::function<double(const SolutionSet&)> fn)
        : n_(n), fn_(std::move(fn)) {}

    int ground_size() const override { return n_; }
    double evaluate(const SolutionSet& s) const override { return fn_(s); }

private:
    int n_;
    std::function<double(const SolutionSet&)> fn_;
};

}  // namespace wsgreedy
