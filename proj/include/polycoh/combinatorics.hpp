#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "polycoh/gee.hpp"
#include "polycoh/index_set.hpp"
#include "polycoh/theta_vector.hpp"

namespace polycoh {

/// binom(m, r) mod 2 for any integer m and r >= 0.
///
/// Negative upper indices reduce through binom(m, r) = (-1)^r binom(r-m-1, r);
/// nonnegative ones use Lucas: odd iff the bits of r are a subset of those of m.
bool binom_parity(std::int64_t m, std::int64_t r);

/// Exact binom(m, r) for 0 <= m; 0 when r < 0 or r > m. Throws Overflow if the
/// value does not fit in 64 bits.
std::uint64_t binom_exact(std::int64_t m, std::int64_t r);

/// S <= T iff there are distinct t_1..t_s in T with s_i <= t_i.
///
/// Greedy: walk S from its largest element down and give each one the largest
/// unused element of T. Two pointers over the sorted lists, O(|S| + |T|).
bool set_leq(const IndexSet& lhs, const IndexSet& rhs);

/// Block counts of J with respect to the partial sums of `a`.
/// Throws OutOfRange if some j exceeds a_1 + ... + a_k.
ThetaVector theta(const IndexSet& subscripts, const GeeParams& a);

/// True iff, for every i, the last i entries sum to at most i. The empty tuple
/// qualifies.
bool in_staircase(const ThetaVector& t);

/// Calls `visit` on every k-tuple of nonnegative integers summing to `total`,
/// in lexicographic order. Nothing is visited when k = 0 and total > 0.
void for_each_composition(int total, std::size_t k,
                          const std::function<void(const ThetaVector&)>& visit);

std::vector<ThetaVector> compositions(int total, std::size_t k);

}  // namespace polycoh
