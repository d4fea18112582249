#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polycoh/bit_matrix.hpp"
#include "polycoh/gee.hpp"
#include "polycoh/index_set.hpp"

namespace polycoh {

inline constexpr std::size_t kDefaultMaxBasis = 20000;

/// The complete top-degree relation set for a single gee: one row per nonempty
/// subgee I, one column per subgee J, entry 1 iff I and J are disjoint.
struct RelationMatrix {
    GeeParams a;
    std::vector<IndexSet> columns;  // enumerate_subgees order, starts with {}
    std::vector<IndexSet> rows;     // columns without the empty set
    BitMatrix bits;
};

struct NullspaceResult {
    std::size_t dimension = 0;
    std::size_t rank = 0;
    /// Present only when the dimension is exactly one.
    std::optional<std::vector<bool>> functional;
};

struct DualityReport {
    GeeParams a;
    std::vector<IndexSet> basis;
    std::size_t rank = 0;
    std::size_t nullity = 0;
    std::vector<bool> oracle_phi;   // empty when nullity != 1
    std::vector<bool> formula_phi;
    bool agree = false;
};

/// The subgees disjoint from I, in enumerate_subgees order. Throws
/// InvalidRelationIndex when I is empty or not a subgee.
std::vector<IndexSet> relation_row(const GeeParams& a, const IndexSet& relation_index);

/// Throws NoRelations for k = 0 and SizeLimit past `max_basis` columns.
RelationMatrix build_matrix(const GeeParams& a, std::size_t max_basis = kDefaultMaxBasis);

/// Solves M phi = 0 over GF(2). A dimension other than one is reported, never
/// thrown.
NullspaceResult nullspace_functional(const RelationMatrix& matrix);

/// Oracle functional against the closed formula on every subgee. For k = 0 the
/// basis is {} alone, there are no relations and both sides are 1.
DualityReport cross_validate(const GeeParams& a, std::size_t max_basis = kDefaultMaxBasis);

/// The first nonempty subgee I whose relation the formula fails to annihilate,
/// or nothing when every relation sums to zero. Uses only the formula side.
struct VerifyResult {
    std::size_t relations = 0;
    std::optional<IndexSet> offending;
};
VerifyResult verify_relations(const GeeParams& a, std::size_t max_basis = kDefaultMaxBasis);

}  // namespace polycoh
