#pragma once

#include "apollo/insphere.hpp"
#include "apollo/shadow.hpp"

#include <vector>

namespace apollo {

enum class ConflictOutcome {
    NoConflict,
    FullConflict,
    LeftVertexConflict,
    RightVertexConflict,
    BothVerticesConflict,
    InteriorConflict,
};

struct OrderedVertex {
    std::string site;      // a or b
    VertexLabelKind label; // Vijka (phi) or Vikja (chi) of that site
    bool operator==(const OrderedVertex&) const = default;
};

using VertexOrdering = std::vector<OrderedVertex>;

const char* to_string(ConflictOutcome c);

// Merged ascending order of the existing vertices of a and b on the
// hyperbolic trisector of i, j, k.
VertexOrdering order(const Site& i, const Site& j, const Site& k, const Site& a, const Site& b);

ConflictOutcome edge_conflict(const Site& i, const Site& j, const Site& k, const Site& l,
                              const Site& m, const Site& q);
// Edge (v_ijkl, +inf).
ConflictOutcome infinite_right_edge_conflict(const Site& i, const Site& j, const Site& k,
                                             const Site& l, const Site& q);
// Edge (-inf, v_ikjm).
ConflictOutcome infinite_left_edge_conflict(const Site& i, const Site& j, const Site& k,
                                            const Site& m, const Site& q);

bool validate_edge(const Site& i, const Site& j, const Site& k, const Site& l, const Site& m);

}  // namespace apollo
