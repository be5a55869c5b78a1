#pragma once

#include "apollo/exact.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace APOLLO_NS {

struct Point3 {
    Scalar x, y, z;

    Point3 operator+(const Point3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Point3 operator-(const Point3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Point3 operator*(const Scalar& s) const { return {x * s, y * s, z * s}; }
    bool operator==(const Point3& o) const { return x == o.x && y == o.y && z == o.z; }
    const Scalar& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

inline Scalar dot(const Point3& a, const Point3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Point3 cross(const Point3& a, const Point3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline Scalar norm2(const Point3& a) { return dot(a, a); }
inline bool is_zero(const Point3& a) { return sgn(a.x) == 0 && sgn(a.y) == 0 && sgn(a.z) == 0; }

struct Site {
    std::string id;
    Point3 c;
    Scalar r;

    bool same_sphere(const Site& o) const { return c == o.c && r == o.r; }
};

Site make_site(std::string id, std::string_view x, std::string_view y, std::string_view z,
               std::string_view r);

// Determinant of a small dense matrix (row-major, n x n), exact.
Scalar det(std::vector<std::vector<Scalar>> m);

Sign orient(const Point3& k, const Point3& l, const Point3& m, const Point3& n);

// Column letters: x y z r 1. A request with one column fewer than rows gets
// the column of ones appended.
Scalar minor_d(std::span<const Site> sites, std::string_view cols);

// Barred quantities relative to the pole: x y z r p (p = pbar). Same
// implicit-ones rule as minor_d.
Scalar minor_e(const Site& pole, std::span<const Site> sites, std::string_view cols);

Scalar pbar(const Site& pole, const Site& s);

// True iff a lies inside b (closed spheres, internal tangency included).
bool is_hidden(const Site& a, const Site& b);

// sgn(delta(C_q, S_a) - delta(C_q, S_b)), delta(p, S) = |p - C| - r.
Sign compare_distance(const Site& q, const Site& a, const Site& b);

// Strict "less weight" relation of the max-weight ordering.
bool lighter(const Site& a, const Site& b);
// Ascending permutation; the last index is perturbed first.
std::vector<std::size_t> max_weight_order(std::span<const Site> sites);

}  // namespace APOLLO_NS
