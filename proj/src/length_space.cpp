#include "polycoh/length_space.hpp"

#include <algorithm>
#include <numeric>

#include "polycoh/combinatorics.hpp"
#include "polycoh/error.hpp"

namespace polycoh {

namespace {

// Scaled totals stay below this so that doubled subset sums cannot overflow.
constexpr std::int64_t kScaledLimit = std::int64_t{1} << 61;

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(x, y, &out) || out > kScaledLimit)
        throw Error(ErrorKind::Overflow, "length vector too large for exact 64-bit arithmetic");
    return out;
}

void require_size(int n, int max_sides) {
    if (n > max_sides)
        throw Error(ErrorKind::SizeLimit, "subset enumeration refused for n = " + std::to_string(n) +
                                              " (limit " + std::to_string(max_sides) + ")");
}

// True when the scaled sum describes a short subset.
bool short_sum(std::int64_t sum, std::int64_t total) { return 2 * sum < total; }

// Visits every short subset of {1..n} containing n, elements chosen from the
// top down. Longness is inherited by supersets, so long branches are pruned.
template <typename Visit>
void for_each_short_with_top(const LengthVector& lengths, Visit&& visit) {
    const int n = lengths.n();
    const auto& w = lengths.scaled();
    const std::int64_t total = lengths.scaled_total();
    std::vector<char> chosen(static_cast<std::size_t>(n) + 1, 0);
    chosen[static_cast<std::size_t>(n)] = 1;

    auto descend = [&](auto&& self, int element, std::int64_t sum) -> void {
        if (element == 0) {
            visit(chosen, sum);
            return;
        }
        self(self, element - 1, sum);
        std::int64_t with = sum + w[static_cast<std::size_t>(element - 1)];
        if (short_sum(with, total)) {
            chosen[static_cast<std::size_t>(element)] = 1;
            self(self, element - 1, with);
            chosen[static_cast<std::size_t>(element)] = 0;
        }
    };
    const std::int64_t top = w.back();
    if (short_sum(top, total)) descend(descend, n - 1, top);
}

// A short set is maximal iff every cover in the dominance order is long:
// adding 1, or bumping some s to s+1 when s+1 is free.
bool is_maximal_short(const LengthVector& lengths, const std::vector<char>& chosen, std::int64_t sum) {
    const int n = lengths.n();
    const auto& w = lengths.scaled();
    const std::int64_t total = lengths.scaled_total();
    auto weight = [&](int element) { return w[static_cast<std::size_t>(element - 1)]; };
    if (!chosen[1] && short_sum(sum + weight(1), total)) return false;
    for (int s = 1; s + 1 < n; ++s)
        if (chosen[static_cast<std::size_t>(s)] && !chosen[static_cast<std::size_t>(s + 1)] &&
            short_sum(sum - weight(s) + weight(s + 1), total))
            return false;
    return true;
}

IndexSet to_index_set(const std::vector<char>& chosen) {
    std::vector<int> elements;
    for (std::size_t i = 1; i < chosen.size(); ++i)
        if (chosen[i]) elements.push_back(static_cast<int>(i));
    return IndexSet(std::move(elements));
}

// Orders sets the way their bitmasks (bit j-1 for element j) would compare.
bool mask_less(const IndexSet& lhs, const IndexSet& rhs) {
    auto a = lhs.elements().rbegin();
    auto b = rhs.elements().rbegin();
    for (; a != lhs.elements().rend() && b != rhs.elements().rend(); ++a, ++b)
        if (*a != *b) return *a < *b;
    return b != rhs.elements().rend();
}

}  // namespace

LengthVector LengthVector::normalize(std::vector<Rational> raw) {
    for (const auto& value : raw)
        if (value <= 0)
            throw Error(ErrorKind::InvalidLength, "side lengths must be positive");
    if (raw.size() < 3)
        throw Error(ErrorKind::TooFewSides,
                    "a polygon needs at least 3 sides, got " + std::to_string(raw.size()));
    std::sort(raw.begin(), raw.end());

    LengthVector out;
    std::int64_t common = 1;
    for (const auto& value : raw)
        common = checked_mul(common / std::gcd(common, value.denominator()), value.denominator());
    std::int64_t total = 0;
    for (const auto& value : raw) {
        std::int64_t scaled = checked_mul(value.numerator(), common / value.denominator());
        out.scaled_.push_back(scaled);
        if (__builtin_add_overflow(total, scaled, &total) || total > kScaledLimit)
            throw Error(ErrorKind::Overflow, "length vector too large for exact 64-bit arithmetic");
    }
    out.lengths_ = std::move(raw);
    out.scaled_total_ = total;
    return out;
}

bool is_short(const LengthVector& lengths, const IndexSet& subset) {
    if (subset.max() > lengths.n())
        throw Error(ErrorKind::OutOfRange, "subset " + subset.str() + " is not inside {1.." +
                                               std::to_string(lengths.n()) + "}");
    std::int64_t sum = 0;
    for (int i : subset) sum += lengths.scaled()[static_cast<std::size_t>(i - 1)];
    if (2 * sum == lengths.scaled_total())
        throw Error(ErrorKind::NotGeneric, "subset " + subset.str() + " balances its complement");
    return short_sum(sum, lengths.scaled_total());
}

bool is_generic(const LengthVector& lengths, int max_sides) {
    require_size(lengths.n(), max_sides);
    const std::int64_t total = lengths.scaled_total();
    if (total % 2 != 0) return true;
    const std::int64_t target = total / 2;

    const auto& w = lengths.scaled();
    const std::size_t half = w.size() / 2;
    auto subset_sums = [&](std::size_t from, std::size_t to) {
        std::vector<std::int64_t> sums{0};
        for (std::size_t i = from; i < to; ++i) {
            const std::size_t size = sums.size();
            for (std::size_t j = 0; j < size; ++j) sums.push_back(sums[j] + w[i]);
        }
        return sums;
    };
    auto low = subset_sums(0, half);
    auto high = subset_sums(half, w.size());
    std::sort(low.begin(), low.end());
    return std::none_of(high.begin(), high.end(), [&](std::int64_t s) {
        return s <= target && std::binary_search(low.begin(), low.end(), target - s);
    });
}

GeneticCode genetic_code(const LengthVector& lengths, int max_sides) {
    require_size(lengths.n(), max_sides);
    if (!is_generic(lengths, max_sides))
        throw Error(ErrorKind::NotGeneric, "length vector is not generic");
    if (!short_sum(lengths.scaled().back(), lengths.scaled_total()))
        throw Error(ErrorKind::EmptySpace, "the longest side is long; the moduli space is empty");

    GeneticCode code;
    code.n = lengths.n();
    for_each_short_with_top(lengths, [&](const std::vector<char>& chosen, std::int64_t sum) {
        if (is_maximal_short(lengths, chosen, sum)) code.genes.push_back(to_index_set(chosen));
    });
    std::sort(code.genes.begin(), code.genes.end(), [](const IndexSet& x, const IndexSet& y) {
        if (x.size() != y.size()) return x.size() > y.size();
        return x.elements() < y.elements();
    });
    return code;
}

GeeParams monogenic_gee(const GeneticCode& code) {
    if (code.genes.size() != 1)
        throw Error(ErrorKind::NotMonogenic,
                    "genetic code has " + std::to_string(code.genes.size()) + " genes, expected 1");
    return GeeParams::from_gee(code.genes.front().without(code.n));
}

std::vector<IndexSet> enumerate_subgees(const GeeParams& a, std::size_t max_count) {
    const int k = static_cast<int>(a.k());
    std::vector<int> block_of(static_cast<std::size_t>(a.top()) + 1, 0);
    for (int j = 1; j <= a.top(); ++j)
        block_of[static_cast<std::size_t>(j)] = static_cast<int>(
            std::lower_bound(a.partial_sums().begin(), a.partial_sums().end(), j) -
            a.partial_sums().begin());

    std::vector<IndexSet> out;
    std::vector<int> chosen;
    // Walking down from the top, everything chosen so far lies in blocks at or
    // above the current one, so the staircase bound for that suffix is k - block.
    auto descend = [&](auto&& self, int element) -> void {
        if (element == 0) {
            if (out.size() >= max_count)
                throw Error(ErrorKind::SizeLimit,
                            "more than " + std::to_string(max_count) + " subgees");
            out.emplace_back(std::vector<int>(chosen.rbegin(), chosen.rend()));
            return;
        }
        self(self, element - 1);
        if (static_cast<int>(chosen.size()) + 1 <= k - block_of[static_cast<std::size_t>(element)]) {
            chosen.push_back(element);
            self(self, element - 1);
            chosen.pop_back();
        }
    };
    descend(descend, a.top());
    std::sort(out.begin(), out.end(), mask_less);
    return out;
}

namespace {

// Quick filter before the full genetic code: the target gene must itself be
// short and maximal.
bool gene_is_maximal_short(const LengthVector& lengths, const IndexSet& gene) {
    std::vector<char> chosen(static_cast<std::size_t>(lengths.n()) + 1, 0);
    std::int64_t sum = 0;
    for (int g : gene) {
        chosen[static_cast<std::size_t>(g)] = 1;
        sum += lengths.scaled()[static_cast<std::size_t>(g - 1)];
    }
    return short_sum(sum, lengths.scaled_total()) && is_maximal_short(lengths, chosen, sum);
}

}  // namespace

LengthVector realize_gee(const GeeParams& a, int search_bound, int max_sides) {
    const int min_sides = std::max(3, a.top() + 1);
    const IndexSet gee = a.gee();

    std::vector<std::int64_t> parts;
    auto try_candidate = [&](int n) {
        std::vector<Rational> raw(parts.begin(), parts.end());
        LengthVector lengths = LengthVector::normalize(std::move(raw));
        if (!gene_is_maximal_short(lengths, gee.with(n))) return false;
        if (!is_generic(lengths, max_sides)) return false;
        GeneticCode code = genetic_code(lengths, max_sides);
        return code.monogenic() && code.genes.front() == gee.with(n);
    };
    // Nondecreasing tuples of `count` positive parts with the given sum, lexicographic.
    auto fill = [&](auto&& self, int count, int remaining, int minimum, int n) -> bool {
        if (count == 0) return remaining == 0 && try_candidate(n);
        for (int v = minimum; v * count <= remaining; ++v) {
            parts.push_back(v);
            bool hit = self(self, count - 1, remaining - v, v, n);
            if (hit) return true;
            parts.pop_back();
        }
        return false;
    };

    for (int total = min_sides; total <= search_bound; ++total) {
        for (int n = min_sides; n <= std::min(total, max_sides); ++n) {
            parts.clear();
            if (fill(fill, n, total, 1, n)) {
                std::vector<Rational> raw(parts.begin(), parts.end());
                return LengthVector::normalize(std::move(raw));
            }
        }
    }
    throw Error(ErrorKind::NotFound, "no integer length vector with total length <= " +
                                         std::to_string(search_bound) + " realizes gee " + gee.str());
}

}  // namespace polycoh
