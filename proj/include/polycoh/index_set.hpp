#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace polycoh {

/// A finite set of distinct positive integers, stored ascending.
///
/// Used for subsets of {1..n}, genes, gees, subgees and the subscript sets
/// of V-monomials. Construction rejects duplicates and non-positive values;
/// input order does not matter.
class IndexSet {
public:
    IndexSet() = default;
    IndexSet(std::initializer_list<int> elements);
    explicit IndexSet(std::vector<int> elements);

    /// Bit i-1 of `mask` selects element i.
    static IndexSet from_mask(std::uint64_t mask);
    /// Inverse of from_mask; every element must be <= 64.
    std::uint64_t to_mask() const;

    const std::vector<int>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    bool contains(int value) const;
    /// Largest element, 0 for the empty set.
    int max() const noexcept { return elements_.empty() ? 0 : elements_.back(); }

    IndexSet with(int value) const;
    IndexSet without(int value) const;
    bool disjoint_from(const IndexSet& other) const;

    auto begin() const noexcept { return elements_.begin(); }
    auto end() const noexcept { return elements_.end(); }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;
    friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

    /// "{1,3,6}" style rendering; "{}" for the empty set.
    std::string str() const;

private:
    std::vector<int> elements_;
};

}  // namespace polycoh
