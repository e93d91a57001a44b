#include "wsgreedy/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wsgreedy/errors.hpp"

namespace wsgreedy {

namespace {

std::uint64_t subsets_up_to(int n, int k) {
    std::uint64_t total = 1;  // empty set
    std::uint64_t binom = 1;
    for (int j = 1; j <= std::min(n, k); ++j) {
        binom = binom * static_cast<std::uint64_t>(n - j + 1) / static_cast<std::uint64_t>(j);
        total += binom;
        if (total > (std::uint64_t{1} << 40)) break;
    }
    return total;
}

std::vector<int> mask_elements(std::uint32_t mask) {
    std::vector<int> elems;
    for (int i = 0; mask != 0; ++i, mask >>= 1)
        if (mask & 1u) elems.push_back(i);
    return elems;
}

// f over every subset mask of {0..n-1}.
std::vector<double> evaluate_all(const SetObjective& f, int n) {
    std::vector<double> value(std::size_t{1} << n);
    for (std::uint32_t m = 0; m < value.size(); ++m)
        value[m] = f.evaluate(SolutionSet(mask_elements(m)));
    return value;
}

}  // namespace

OracleReport brute_force_min(const SetObjective& f, int k, int n, std::uint64_t guard) {
    if (k < 1) throw ConfigError("k must be >= 1");
    if (n < 1 || n > f.ground_size()) throw ConfigError("invalid ground size");
    if (subsets_up_to(n, k) > guard)
        throw GuardError("brute_force_min enumeration exceeds the guard of " +
                         std::to_string(guard) + " sets");

    OracleReport report;
    report.optimum_value = std::numeric_limits<double>::infinity();
    bool have = false;

    std::vector<int> combo;
    auto consider = [&](const std::vector<int>& elems) {
        ++report.enumerated_count;
        const SolutionSet s(elems);
        const double v = f.evaluate(s);
        if (std::isinf(v)) return;
        if (!have || v < report.optimum_value ||
            (v == report.optimum_value && elems < report.optimum_set.elements())) {
            report.optimum_value = v;
            report.optimum_set = s;
            have = true;
        }
    };
    consider({});
    auto recurse = [&](auto&& self, int start) -> void {
        if (!combo.empty()) consider(combo);
        if (static_cast<int>(combo.size()) == k) return;
        for (int i = start; i < n; ++i) {
            combo.push_back(i);
            self(self, i + 1);
            combo.pop_back();
        }
    };
    recurse(recurse, 0);

    if (!have) throw ConfigError("objective is infinite on every enumerated set");
    return report;
}

OracleReport verify_weak_supermodularity(const SetObjective& f, double alpha, int n, double tol,
                                         int max_n) {
    if (n > max_n)
        throw GuardError("verify_weak_supermodularity refuses n=" + std::to_string(n) +
                         " (limit " + std::to_string(max_n) + ")");
    const auto value = evaluate_all(f, n);
    const std::uint32_t full = 1u << n;

    OracleReport report;
    for (std::uint32_t s = 1; s < full; ++s) {
        if (std::isinf(value[s])) continue;
        for (std::uint32_t t = 1; t < full; ++t) {
            const std::uint32_t diff = t & ~s;
            if (diff == 0) continue;
            ++report.enumerated_count;
            const double lhs = value[s] - value[s | t];
            double best_gain = 0.0;
            for (std::uint32_t bit = diff; bit != 0; bit &= bit - 1) {
                const std::uint32_t i = bit & ~(bit - 1);
                best_gain = std::max(best_gain, value[s] - value[s | i]);
            }
            const double rhs =
                alpha * static_cast<double>(__builtin_popcount(diff)) * best_gain;
            if (lhs > rhs + tol) {
                report.verified = false;
                report.witness = {mask_elements(s), mask_elements(t)};
                return report;
            }
        }
    }
    report.verified = true;
    return report;
}

double estimate_alpha_empirical(const SetObjective& f, int n, int max_n) {
    if (n > max_n)
        throw GuardError("estimate_alpha_empirical refuses n=" + std::to_string(n) + " (limit " +
                         std::to_string(max_n) + ")");
    const auto value = evaluate_all(f, n);
    const std::uint32_t full = 1u << n;

    double alpha = 1.0;
    for (std::uint32_t s = 1; s < full; ++s) {
        if (std::isinf(value[s])) continue;
        for (std::uint32_t t = 1; t < full; ++t) {
            const std::uint32_t diff = t & ~s;
            if (diff == 0) continue;
            const double lhs = value[s] - value[s | t];
            double best_gain = 0.0;
            for (std::uint32_t bit = diff; bit != 0; bit &= bit - 1) {
                const std::uint32_t i = bit & ~(bit - 1);
                best_gain = std::max(best_gain, value[s] - value[s | i]);
            }
            const double denom = static_cast<double>(__builtin_popcount(diff)) * best_gain;
            if (denom > 0.0 && lhs > 0.0) alpha = std::max(alpha, lhs / denom);
        }
    }
    return alpha;
}

std::optional<double> estimate_curvature(const SetObjective& f, int n, int max_n,
                                         double denom_tol) {
    if (n > max_n)
        throw GuardError("estimate_curvature refuses n=" + std::to_string(n) + " (limit " +
                         std::to_string(max_n) + ")");
    const auto value = evaluate_all(f, n);
    const std::uint32_t full = 1u << n;

    double min_ratio = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
        const std::uint32_t jbit = 1u << j;
        double min_gain = std::numeric_limits<double>::infinity();
        double max_gain = 0.0;
        for (std::uint32_t s = 0; s < full; ++s) {
            if ((s & jbit) != 0) continue;
            if (std::isinf(value[s]) || std::isinf(value[s | jbit])) continue;
            const double g = value[s] - value[s | jbit];
            min_gain = std::min(min_gain, g);
            max_gain = std::max(max_gain, g);
        }
        if (max_gain <= denom_tol) continue;  // every denominator for j vanishes
        min_ratio = std::min(min_ratio, min_gain / max_gain);
    }
    if (std::isinf(min_ratio)) return std::nullopt;
    return 1.0 - min_ratio;
}

}  // namespace wsgreedy
