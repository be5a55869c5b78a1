#pragma once

#include "apollo/trisector.hpp"
#include "planes.hpp"

namespace APOLLO_NS::detail {

// Z-space planes tangent to i, j, k (normal pointing at the centers).
struct TangentPlanes {
    Plane minus, plus;
    bool parabolic = false;
};

TangentPlanes tangent_planes(const Site& i, const Site& j, const Site& k);
Sign plane_distance(const Plane& pl, const Site& a);

}  // namespace APOLLO_NS::detail
