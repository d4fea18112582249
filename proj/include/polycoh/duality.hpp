#pragma once

#include <cstdint>
#include <vector>

#include "polycoh/gee.hpp"
#include "polycoh/index_set.hpp"
#include "polycoh/theta_vector.hpp"

namespace polycoh {

/// The top-degree monomial R^(n-3-r) V_j1 ... V_jr, kept as bookkeeping only.
class TopMonomial {
public:
    /// Throws ContractViolation unless n >= 3, every j <= n-1 and r <= n-3.
    TopMonomial(IndexSet subscripts, int n);

    const IndexSet& subscripts() const noexcept { return subscripts_; }
    int n() const noexcept { return n_; }
    int r() const noexcept { return static_cast<int>(subscripts_.size()); }
    int r_exponent() const noexcept { return n_ - 3 - r(); }

private:
    IndexSet subscripts_;
    int n_;
};

/// One admissible B in the duality sum together with its product mod 2.
struct DualityTerm {
    ThetaVector b;
    bool value;
};

/// The B-sum of the duality formula for a given theta profile, without any
/// feasibility check on `profile` beyond its length. Admissible B have
/// |B| = k - |profile| and B + profile in the staircase; each contributes
/// prod_i binom(a_i + b_i - 2, b_i) mod 2.
bool duality_sum(const GeeParams& a, const ThetaVector& profile);

/// Same sum, listing every admissible B in lexicographic order.
std::vector<DualityTerm> duality_terms(const GeeParams& a, const ThetaVector& profile);

/// The Poincare-duality value of a top monomial for the single gee `a`.
/// Subscripts above a_1+...+a_k and r > k both give the zero class.
bool phi(const GeeParams& a, const TopMonomial& monomial);

/// phi of any monomial whose subscripts have block profile T. Throws
/// InfeasibleTheta when some t_i > a_i and ContractViolation on a length
/// mismatch.
bool phi_by_theta(const GeeParams& a, const ThetaVector& profile);

/// Closed forms for k = 3 written in terms of a_i' = a_i - 1, evaluated mod 2.
/// Returns 0 outside the staircase; ContractViolation for k != 3 or |T| > 3.
bool closed_form_k3(const GeeParams& a, const ThetaVector& profile);

/// Number of subgees J disjoint from a subgee I with theta(I) = m and
/// theta(J) = C, which is prod_i binom(a_i - m_i, c_i) when C is in the
/// staircase and 0 otherwise. Exact integer.
std::uint64_t count_disjoint_subgees(const GeeParams& a, const ThetaVector& occupied,
                                     const ThetaVector& profile);

}  // namespace polycoh
