#pragma once

#include "apollo/core.hpp"

#include <array>
#include <string>

namespace apollo {

enum class VertexLabelKind { Vijka, Vikja };

struct VertexLabel {
    VertexLabelKind kind = VertexLabelKind::Vijka;
    std::array<std::string, 4> ids;  // i, j, k, a as passed
};

const char* to_string(VertexLabelKind k);

}  // namespace apollo

namespace APOLLO_NS {

// Homogeneous center (x : y : z : w) in Q(sqrt(delta)); all entries share delta.
struct ApolloniusVertex {
    VertexLabel label;
    QuadExt x, y, z, w;

    // Exact de-homogenized coordinate (c = 0, 1, 2).
    QuadExt coordinate(int c) const;
};

ApolloniusVertex vertex_coordinates(const Site& i, const Site& j, const Site& k, const Site& a,
                                    VertexLabelKind label);

// Sign of b against the Apollonius sphere centered at v_ijka: Negative when b
// meets the open ball, Zero when tangent, Positive otherwise.
Sign insphere(const Site& i, const Site& j, const Site& k, const Site& a, const Site& b);

}  // namespace APOLLO_NS
