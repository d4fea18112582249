#include "polycoh/duality.hpp"

#include "polycoh/combinatorics.hpp"
#include "polycoh/error.hpp"

namespace polycoh {

TopMonomial::TopMonomial(IndexSet subscripts, int n) : subscripts_(std::move(subscripts)), n_(n) {
    if (n_ < 3) throw Error(ErrorKind::ContractViolation, "top monomial needs n >= 3");
    if (subscripts_.max() > n_ - 1)
        throw Error(ErrorKind::ContractViolation,
                    "V-subscript " + std::to_string(subscripts_.max()) + " exceeds n-1 = " +
                        std::to_string(n_ - 1));
    if (r() > n_ - 3)
        throw Error(ErrorKind::ContractViolation,
                    "monomial with " + std::to_string(r()) + " V-factors exceeds degree n-3 = " +
                        std::to_string(n_ - 3));
}

namespace {

bool term_parity(const GeeParams& a, const ThetaVector& b) {
    for (std::size_t i = 0; i < a.k(); ++i)
        if (!binom_parity(a[i] + b[i] - 2, b[i])) return false;
    return true;
}

template <typename Visit>
void for_each_admissible(const GeeParams& a, const ThetaVector& profile, Visit&& visit) {
    if (profile.size() != a.k())
        throw Error(ErrorKind::ContractViolation, "theta profile length does not match k");
    const int free = static_cast<int>(a.k()) - profile.total();
    for_each_composition(free, a.k(), [&](const ThetaVector& b) {
        if (in_staircase(b + profile)) visit(b);
    });
}

}  // namespace

bool duality_sum(const GeeParams& a, const ThetaVector& profile) {
    bool sum = false;
    for_each_admissible(a, profile, [&](const ThetaVector& b) { sum ^= term_parity(a, b); });
    return sum;
}

std::vector<DualityTerm> duality_terms(const GeeParams& a, const ThetaVector& profile) {
    std::vector<DualityTerm> out;
    for_each_admissible(a, profile, [&](const ThetaVector& b) {
        out.push_back({b, term_parity(a, b)});
    });
    return out;
}

bool phi(const GeeParams& a, const TopMonomial& monomial) {
    const IndexSet& j = monomial.subscripts();
    if (j.max() > a.top()) return false;
    if (monomial.r() > static_cast<int>(a.k())) return false;
    return duality_sum(a, theta(j, a));
}

bool phi_by_theta(const GeeParams& a, const ThetaVector& profile) {
    if (profile.size() != a.k())
        throw Error(ErrorKind::ContractViolation, "theta profile length does not match k");
    for (std::size_t i = 0; i < a.k(); ++i)
        if (profile[i] > a[i])
            throw Error(ErrorKind::InfeasibleTheta,
                        "theta " + profile.str() + " has more entries in block " +
                            std::to_string(i + 1) + " than a_" + std::to_string(i + 1));
    return duality_sum(a, profile);
}

bool closed_form_k3(const GeeParams& a, const ThetaVector& profile) {
    if (a.k() != 3 || profile.size() != 3)
        throw Error(ErrorKind::ContractViolation, "closed_form_k3 needs k = 3");
    if (profile.total() > 3)
        throw Error(ErrorKind::ContractViolation, "closed_form_k3 needs |T| <= 3");
    if (!in_staircase(profile)) return false;
    if (profile.total() == 3) return true;

    const std::int64_t p1 = a[0] - 1, p2 = a[1] - 1, p3 = a[2] - 1;
    const std::int64_t c1 = std::int64_t{a[0]} * (a[0] - 1) / 2;
    const std::int64_t c2 = std::int64_t{a[1]} * (a[1] - 1) / 2;
    const auto& t = profile.entries();
    std::int64_t value = 0;
    if (t == std::vector{0, 2, 0} || t == std::vector{0, 1, 1})
        value = p1;
    else if (t == std::vector{1, 0, 1})
        value = p1 + p2;
    else if (t == std::vector{2, 0, 0} || t == std::vector{1, 1, 0})
        value = p1 + p2 + p3;
    else if (t == std::vector{0, 0, 1})
        value = c1 + p1 * p2;
    else if (t == std::vector{0, 1, 0})
        value = c1 + p1 * p2 + p1 * p3;
    else if (t == std::vector{1, 0, 0})
        value = c1 + c2 + p1 * p2 + p1 * p3 + p2 * p3;
    else  // (0,0,0)
        value = c1 * (p1 + p2 + p3) + c2 * p1 + p1 * p2 * p3;
    return (value & 1) != 0;
}

std::uint64_t count_disjoint_subgees(const GeeParams& a, const ThetaVector& occupied,
                                     const ThetaVector& profile) {
    if (occupied.size() != a.k() || profile.size() != a.k())
        throw Error(ErrorKind::ContractViolation, "theta vectors must have length k");
    for (std::size_t i = 0; i < a.k(); ++i)
        if (occupied[i] > a[i])
            throw Error(ErrorKind::InfeasibleTheta,
                        "occupied profile " + occupied.str() + " exceeds block " + std::to_string(i + 1));
    if (!in_staircase(profile)) return 0;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < a.k(); ++i) {
        std::uint64_t factor = binom_exact(a[i] - occupied[i], profile[i]);
        if (factor != 0 && count > UINT64_MAX / factor)
            throw Error(ErrorKind::Overflow, "disjoint subgee count exceeds 64 bits");
        count *= factor;
    }
    return count;
}

}  // namespace polycoh
