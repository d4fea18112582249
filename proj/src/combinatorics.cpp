#include "polycoh/combinatorics.hpp"

#include <algorithm>

#include "polycoh/error.hpp"

namespace polycoh {

bool binom_parity(std::int64_t m, std::int64_t r) {
    if (r < 0) throw Error(ErrorKind::ContractViolation, "binom_parity: negative lower index");
    if (m < 0) m = r - m - 1;  // binom(m, r) = (-1)^r binom(r - m - 1, r)
    if (m < r) return false;
    return (r & (m - r)) == 0;
}

std::uint64_t binom_exact(std::int64_t m, std::int64_t r) {
    if (m < 0) throw Error(ErrorKind::ContractViolation, "binom_exact: negative upper index");
    if (r < 0 || r > m) return 0;
    r = std::min(r, m - r);
    unsigned __int128 value = 1;
    for (std::int64_t i = 1; i <= r; ++i) {
        value = value * static_cast<unsigned __int128>(m - r + i) / static_cast<unsigned __int128>(i);
        if (value > UINT64_MAX)
            throw Error(ErrorKind::Overflow, "binom_exact: result exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(value);
}

bool set_leq(const IndexSet& lhs, const IndexSet& rhs) {
    const auto& s = lhs.elements();
    const auto& t = rhs.elements();
    if (s.size() > t.size()) return false;
    auto ti = t.rbegin();
    for (auto si = s.rbegin(); si != s.rend(); ++si, ++ti)
        if (*ti < *si) return false;
    return true;
}

ThetaVector theta(const IndexSet& subscripts, const GeeParams& a) {
    std::vector<int> counts(a.k(), 0);
    const auto& sums = a.partial_sums();
    for (int j : subscripts) {
        auto block = std::lower_bound(sums.begin(), sums.end(), j);
        if (block == sums.end())
            throw Error(ErrorKind::OutOfRange,
                        "theta: element " + std::to_string(j) + " exceeds a_1+...+a_k = " +
                            std::to_string(a.top()));
        ++counts[static_cast<std::size_t>(block - sums.begin())];
    }
    return ThetaVector(std::move(counts));
}

bool in_staircase(const ThetaVector& t) {
    int suffix = 0;
    int length = 0;
    for (auto it = t.entries().rbegin(); it != t.entries().rend(); ++it) {
        suffix += *it;
        if (suffix > ++length) return false;
    }
    return true;
}

namespace {

void compose(std::vector<int>& prefix, std::size_t position, int remaining,
             const std::function<void(const ThetaVector&)>& visit) {
    if (position + 1 == prefix.size()) {
        prefix[position] = remaining;
        visit(ThetaVector(prefix));
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        prefix[position] = v;
        compose(prefix, position + 1, remaining - v, visit);
    }
}

}  // namespace

void for_each_composition(int total, std::size_t k,
                          const std::function<void(const ThetaVector&)>& visit) {
    if (total < 0) return;
    if (k == 0) {
        if (total == 0) visit(ThetaVector{});
        return;
    }
    std::vector<int> prefix(k, 0);
    compose(prefix, 0, total, visit);
}

std::vector<ThetaVector> compositions(int total, std::size_t k) {
    std::vector<ThetaVector> out;
    for_each_composition(total, k, [&](const ThetaVector& t) { out.push_back(t); });
    return out;
}

}  // namespace polycoh
