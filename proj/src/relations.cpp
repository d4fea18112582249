#include "polycoh/relations.hpp"

#include <algorithm>

#include "polycoh/combinatorics.hpp"
#include "polycoh/duality.hpp"
#include "polycoh/error.hpp"
#include "polycoh/length_space.hpp"

namespace polycoh {

namespace {

std::vector<IndexSet> guarded_subgees(const GeeParams& a, std::size_t max_basis) {
    try {
        return enumerate_subgees(a, max_basis);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::SizeLimit) throw;
        throw Error(ErrorKind::SizeLimit, "basis for a = " + a.str() + " has more than " +
                                              std::to_string(max_basis) + " subgees");
    }
}

bool is_subgee(const GeeParams& a, const IndexSet& set) {
    return set.max() <= a.top() && in_staircase(theta(set, a));
}

std::vector<bool> formula_values(const GeeParams& a, const std::vector<IndexSet>& basis) {
    std::vector<bool> out;
    out.reserve(basis.size());
    for (const auto& j : basis) out.push_back(phi_by_theta(a, theta(j, a)));
    return out;
}

}  // namespace

std::vector<IndexSet> relation_row(const GeeParams& a, const IndexSet& relation_index) {
    if (relation_index.empty() || !is_subgee(a, relation_index))
        throw Error(ErrorKind::InvalidRelationIndex,
                    relation_index.str() + " is not a nonempty subgee of " + a.gee().str());
    std::vector<IndexSet> out;
    for (auto& j : enumerate_subgees(a))
        if (j.disjoint_from(relation_index)) out.push_back(std::move(j));
    return out;
}

RelationMatrix build_matrix(const GeeParams& a, std::size_t max_basis) {
    if (a.k() == 0)
        throw Error(ErrorKind::NoRelations, "k = 0: the only subgee is {} and there are no relations");
    RelationMatrix m;
    m.a = a;
    m.columns = guarded_subgees(a, max_basis);
    m.rows.assign(m.columns.begin() + 1, m.columns.end());
    m.bits = BitMatrix(m.rows.size(), m.columns.size());
    for (std::size_t r = 0; r < m.rows.size(); ++r)
        for (std::size_t c = 0; c < m.columns.size(); ++c)
            if (m.rows[r].disjoint_from(m.columns[c])) m.bits.set(r, c, true);
    return m;
}

NullspaceResult nullspace_functional(const RelationMatrix& matrix) {
    NullspaceResult out;
    auto basis = matrix.bits.nullspace();
    out.dimension = basis.size();
    out.rank = matrix.bits.cols() - out.dimension;
    if (out.dimension == 1) out.functional = std::move(basis.front());
    return out;
}

DualityReport cross_validate(const GeeParams& a, std::size_t max_basis) {
    DualityReport report;
    report.a = a;
    if (a.k() == 0) {
        report.basis = {IndexSet{}};
        report.nullity = 1;
        report.oracle_phi = {true};
    } else {
        RelationMatrix matrix = build_matrix(a, max_basis);
        NullspaceResult solved = nullspace_functional(matrix);
        report.basis = std::move(matrix.columns);
        report.rank = solved.rank;
        report.nullity = solved.dimension;
        if (solved.functional) report.oracle_phi = std::move(*solved.functional);
    }
    report.formula_phi = formula_values(a, report.basis);
    report.agree = report.nullity == 1 && report.oracle_phi == report.formula_phi;
    return report;
}

VerifyResult verify_relations(const GeeParams& a, std::size_t max_basis) {
    VerifyResult out;
    const auto basis = guarded_subgees(a, max_basis);
    const auto values = formula_values(a, basis);
    out.relations = basis.size() - 1;
    for (std::size_t i = 1; i < basis.size(); ++i) {
        bool sum = false;
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (values[j] && basis[i].disjoint_from(basis[j])) sum = !sum;
        if (sum) {
            out.offending = basis[i];
            return out;
        }
    }
    return out;
}

}  // namespace polycoh
