#include "wsgreedy/objective.hpp"

namespace wsgreedy {

double SetObjective::gain(const SolutionSet& s, int i) const {
    if (s.contains(i)) return 0.0;
    return evaluate(s) - evaluate(s.with(i));
}

std::vector<CandidateValue> SetObjective::extension_values(const SolutionSet& s) const {
    std::vector<CandidateValue> out;
    const int n = ground_size();
    out.reserve(static_cast<std::size_t>(n) - s.size());
    for (int i = 0; i < n; ++i) {
        if (s.contains(i)) continue;
        out.push_back({i, evaluate(s.with(i))});
    }
    return out;
}

}  // namespace wsgreedy
