#pragma once

#include <unordered_set>
#include <vector>

namespace wsgreedy {

// Ordered, duplicate-free subset of the ground set {0,...,n-1}.
// Insertion order is preserved so a greedy run's history can be read back.
class SolutionSet {
public:
    SolutionSet() = default;
    explicit SolutionSet(const std::vector<int>& elems);

    void add(int i);  // throws ConfigError on duplicates or negative indices
    bool contains(int i) const { return members_.count(i) > 0; }

    const std::vector<int>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }

    // Union with a single element, as a copy.
    SolutionSet with(int i) const;

    bool operator==(const SolutionSet& other) const { return elements_ == other.elements_; }

private:
    std::vector<int> elements_;
    std::unordered_set<int> members_;
};

}  // namespace wsgreedy
