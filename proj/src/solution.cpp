#include "wsgreedy/solution.hpp"

#include "wsgreedy/errors.hpp"

namespace wsgreedy {

SolutionSet::SolutionSet(const std::vector<int>& elems) {
    for (int e : elems) add(e);
}

void SolutionSet::add(int i) {
    if (i < 0) throw ConfigError("solution element must be non-negative, got " + std::to_string(i));
    if (!members_.insert(i).second)
        throw ConfigError("duplicate solution element " + std::to_string(i));
    elements_.push_back(i);
}

SolutionSet SolutionSet::with(int i) const {
    SolutionSet out = *this;
    out.add(i);
    return out;
}

}  // namespace wsgreedy
