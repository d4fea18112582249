#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "polycoh/index_set.hpp"

namespace polycoh {

/// Increment parametrization (a_1, ..., a_k) of a monogenic gee
/// G = {a_1, a_1+a_2, ..., a_1+...+a_k}. Every a_i is at least 1, so the
/// partial sums are strictly increasing; k = 0 is the gee-less code {{n}}.
class GeeParams {
public:
    GeeParams() = default;
    GeeParams(std::initializer_list<int> increments);
    explicit GeeParams(std::vector<int> increments);

    /// Reads increments back from a gee's elements (differences of partial sums).
    static GeeParams from_gee(const IndexSet& gee);

    std::size_t k() const noexcept { return increments_.size(); }
    const std::vector<int>& increments() const noexcept { return increments_; }
    int operator[](std::size_t i) const { return increments_[i]; }

    /// a_1 + ... + a_k, the largest element of the gee (0 when k = 0).
    int top() const noexcept { return partial_sums_.empty() ? 0 : partial_sums_.back(); }
    /// a_1 + ... + a_i for i = 1..k.
    const std::vector<int>& partial_sums() const noexcept { return partial_sums_; }
    IndexSet gee() const { return IndexSet(partial_sums_); }

    friend bool operator==(const GeeParams& lhs, const GeeParams& rhs) {
        return lhs.increments_ == rhs.increments_;
    }
    friend auto operator<=>(const GeeParams& lhs, const GeeParams& rhs) {
        return lhs.increments_ <=> rhs.increments_;
    }

    std::string str() const;

private:
    std::vector<int> increments_;
    std::vector<int> partial_sums_;
};

}  // namespace polycoh
