#pragma once

// Exact solver for planes a x + b y + c z + d = rho_n (n = 1..3) with unit
// normal (a,b,c). Used in W-space (inverted centers, signed inverted radii)
// and in Z-space (tangent planes of three sites).

#include "apollo/core.hpp"

#include <array>
#include <vector>

namespace APOLLO_NS::detail {

struct Vec3Q {
    QuadExt x, y, z;
};

QuadExt dot(const Vec3Q& a, const Point3& b);
QuadExt det3(const Vec3Q& a, const Vec3Q& b, const Vec3Q& c);

struct Plane {
    Vec3Q n;
    QuadExt d;

    QuadExt eval(const Point3& p) const { return dot(n, p) + d; }
};

struct PlaneSystem {
    enum class Status { Ok, Underdetermined, Inconsistent };
    Status status = Status::Ok;
    Scalar disc;                // discriminant of the unit-norm quadratic
    std::vector<Plane> roots;   // 0, 1 (double) or 2 (minus-root first)
};

PlaneSystem unit_planes(const std::array<Point3, 3>& centers, const std::array<Scalar, 3>& radii);

// Planes tangent to two W-space spheres whose normal is orthogonal to g
// (g must be orthogonal to the center difference and nonzero). Returns 0 or
// 2 planes.
std::vector<Plane> planes_orthogonal_to(const Point3& c1, const Scalar& r1, const Point3& c2,
                                        const Scalar& r2, const Point3& g);

int rank(std::vector<std::vector<Scalar>> m);

}  // namespace APOLLO_NS::detail
