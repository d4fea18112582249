#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace polycoh {

/// A k-tuple of nonnegative integers.
///
/// Serves as the block-count profile theta(J) of a subscript set and as the
/// composition vectors B, C, T that the duality formula sums over.
class ThetaVector {
public:
    ThetaVector() = default;
    ThetaVector(std::initializer_list<int> entries);
    explicit ThetaVector(std::vector<int> entries);

    static ThetaVector zeros(std::size_t k) { return ThetaVector(std::vector<int>(k, 0)); }

    std::size_t size() const noexcept { return entries_.size(); }
    const std::vector<int>& entries() const noexcept { return entries_; }
    int operator[](std::size_t i) const { return entries_[i]; }
    /// Sum of the entries, the grading weight |T|.
    int total() const noexcept;

    friend ThetaVector operator+(const ThetaVector& lhs, const ThetaVector& rhs);
    friend bool operator==(const ThetaVector&, const ThetaVector&) = default;
    friend auto operator<=>(const ThetaVector&, const ThetaVector&) = default;

    /// "(1,0,2)" style rendering; "()" when k = 0.
    std::string str() const;

private:
    std::vector<int> entries_;
};

}  // namespace polycoh
