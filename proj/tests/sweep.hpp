#pragma once

#include <functional>
#include <vector>

#include "polycoh/gee.hpp"
#include "polycoh/theta_vector.hpp"

namespace polycoh::testing {

/// Calls `visit` on every tuple of length `k` with entries in [lo, hi],
/// lexicographically.
inline void for_each_tuple(std::size_t k, int lo, int hi, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> tuple(k, lo);
    while (true) {
        visit(tuple);
        std::size_t i = k;
        while (i > 0 && tuple[i - 1] == hi) tuple[--i] = lo;
        if (i == 0) return;
        ++tuple[i - 1];
    }
}

/// Every a with k in [k_lo, k_hi] and 1 <= a_i <= max_entry.
inline void for_each_gee(std::size_t k_lo, std::size_t k_hi, int max_entry,
                         const std::function<void(const GeeParams&)>& visit) {
    for (std::size_t k = k_lo; k <= k_hi; ++k)
        for_each_tuple(k, 1, max_entry, [&](const std::vector<int>& t) { visit(GeeParams(t)); });
}

}  // namespace polycoh::testing
