#pragma once

// Shared exact machinery: the four-site tangent plane solve in W-space,
// vertex labels, and membership tests against W-space planes.

#include "apollo/shadow.hpp"
#include "planes.hpp"

#include <array>
#include <vector>

namespace APOLLO_NS::detail {

const Site& lightest(std::initializer_list<const Site*> sites);

struct Root {
    Plane plane;   // W-space plane, pole at the origin
    Sign d_sign;   // > 0: finite external sphere
    Sign label;    // orientation of the tangency directions (i, j, k, a)
};

struct FourSolve {
    const Site* pole = nullptr;
    PlaneSystem::Status status = PlaneSystem::Status::Ok;
    Scalar disc;
    std::vector<Root> roots;  // every root of the unit-norm quadratic
    ExistenceCount count = ExistenceCount::Zero;

    // The finite vertex with the given label sign, or nullptr.
    const Root* vertex(Sign label) const;
};

FourSolve solve_four(const Site& i, const Site& j, const Site& k, const Site& a);

// Sign of b against the Apollonius sphere whose W-space image (pole at
// origin) is `pl`, d > 0.
Sign membership(const Plane& pl, const Site& pole, const Site& b);

// A point on the trisector of i, j, k lying in the plane of the centers
// (symmetric point); W-space plane w.r.t. `pole` (lightest of the three).
// Returns false when no such finite point exists.
bool reference_plane(const Site& i, const Site& j, const Site& k, const Site*& pole, Plane& out);

// Homogeneous Z-space center of the sphere represented by a W-space plane.
void back_map(const Plane& pl, const Site& pole, QuadExt& x, QuadExt& y, QuadExt& z, QuadExt& w);

}  // namespace APOLLO_NS::detail
