#pragma once

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "polycoh/gee.hpp"
#include "polycoh/index_set.hpp"

namespace polycoh {

using Rational = boost::rational<std::int64_t>;

/// Subset enumeration over more sides than this is refused with SizeLimit.
inline constexpr int kDefaultMaxSides = 30;

/// Side lengths of a planar polygon, sorted ascending, n >= 3.
///
/// Lengths are exact rationals. Internally they are multiplied by the common
/// denominator so every subset comparison is an integer comparison.
class LengthVector {
public:
    /// Sorts `raw` ascending. Throws InvalidLength for a nonpositive entry,
    /// TooFewSides for fewer than three entries and Overflow when the scaled
    /// integer lengths would not fit comfortably in 64 bits.
    static LengthVector normalize(std::vector<Rational> raw);

    int n() const noexcept { return static_cast<int>(lengths_.size()); }
    const std::vector<Rational>& lengths() const noexcept { return lengths_; }
    /// Lengths times the lcm of their denominators.
    const std::vector<std::int64_t>& scaled() const noexcept { return scaled_; }
    std::int64_t scaled_total() const noexcept { return scaled_total_; }

    friend bool operator==(const LengthVector& lhs, const LengthVector& rhs) {
        return lhs.lengths_ == rhs.lengths_;
    }

private:
    std::vector<Rational> lengths_;
    std::vector<std::int64_t> scaled_;
    std::int64_t scaled_total_ = 0;
};

/// The maximal short subsets containing n, ordered by decreasing size and then
/// lexicographically on their ascending element lists.
struct GeneticCode {
    int n = 0;
    std::vector<IndexSet> genes;

    bool monogenic() const noexcept { return genes.size() == 1; }
    friend bool operator==(const GeneticCode&, const GeneticCode&) = default;
};

/// Sum over S strictly below the sum over the complement. Throws OutOfRange if
/// S is not inside {1..n} and NotGeneric when the two sums are equal.
bool is_short(const LengthVector& lengths, const IndexSet& subset);

/// No subset sum equals its complement's sum. Meet-in-the-middle over the
/// scaled integers; SizeLimit above `max_sides`.
bool is_generic(const LengthVector& lengths, int max_sides = kDefaultMaxSides);

/// Throws NotGeneric, EmptySpace when {n} is long, SizeLimit above `max_sides`.
GeneticCode genetic_code(const LengthVector& lengths, int max_sides = kDefaultMaxSides);

/// Strips n from the single gene and returns the increments of what is left.
/// Throws NotMonogenic unless the code has exactly one gene.
GeeParams monogenic_gee(const GeneticCode& code);

/// Every J inside {1..a_1+...+a_k} whose theta lies in the staircase, i.e.
/// every subgee, the empty set included. Ordered by ascending bitmask (bit
/// j-1 for element j). Throws SizeLimit when more than `max_count` sets would
/// be produced.
std::vector<IndexSet> enumerate_subgees(const GeeParams& a,
                                        std::size_t max_count = 1u << 20);

inline constexpr int kDefaultRealizeBound = 30;

/// Finds a generic integer length vector whose genetic code is exactly
/// {gee(a) + {n}}.
///
/// Candidates are visited by increasing total length; within one total, by
/// increasing n starting at max(3, top(a) + 1); within one n, nondecreasing
/// tuples in lexicographic order. The first vector that realizes the code is
/// returned. Throws NotFound once totals above `search_bound` would be needed.
LengthVector realize_gee(const GeeParams& a, int search_bound = kDefaultRealizeBound,
                         int max_sides = kDefaultMaxSides);

}  // namespace polycoh
