#include "planes.hpp"

#include "apollo/errors.hpp"

namespace APOLLO_NS::detail {

QuadExt dot(const Vec3Q& a, const Point3& b) { return a.x * QuadExt(b.x) + a.y * QuadExt(b.y) + a.z * QuadExt(b.z); }

QuadExt det3(const Vec3Q& a, const Vec3Q& b, const Vec3Q& c) {
    return a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) +
           a.z * (b.x * c.y - b.y * c.x);
}

int rank(std::vector<std::vector<Scalar>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    int r = 0;
    for (std::size_t c = 0; c < cols && r < static_cast<int>(rows); ++c) {
        std::size_t piv = r;
        while (piv < rows && sgn(m[piv][c]) == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (sgn(m[i][c]) == 0) continue;
            Scalar f = m[i][c] / m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

PlaneSystem unit_planes(const std::array<Point3, 3>& centers, const std::array<Scalar, 3>& radii) {
    PlaneSystem out;
    // rows (cx, cy, cz, 1); unknowns (a, b, c, d)
    std::array<std::array<Scalar, 4>, 3> A;
    for (int n = 0; n < 3; ++n) A[n] = {centers[n].x, centers[n].y, centers[n].z, Scalar(1)};

    auto minor3 = [&](int skip, int replace = -1) {
        // determinant of the three columns other than `skip`; column
        // `replace` (if given) is substituted by the right-hand side
        std::vector<std::vector<Scalar>> m(3);
        for (int n = 0; n < 3; ++n)
            for (int c = 0; c < 4; ++c)
                if (c != skip) m[n].push_back(c == replace ? radii[n] : A[n][c]);
        return det(std::move(m));
    };

    // null vector: generalized cross product of the three rows
    std::array<Scalar, 4> N;
    for (int m = 0; m < 4; ++m) N[m] = (m % 2 == 0 ? 1 : -1) * minor3(m);
    int pivot = -1;
    for (int m : {3, 2, 1, 0})
        if (sgn(N[m]) != 0) {
            pivot = m;
            break;
        }
    if (pivot < 0) {
        std::vector<std::vector<Scalar>> aug(3);
        std::vector<std::vector<Scalar>> plain(3);
        for (int n = 0; n < 3; ++n) {
            plain[n] = {A[n][0], A[n][1], A[n][2], A[n][3]};
            aug[n] = plain[n];
            aug[n].push_back(radii[n]);
        }
        out.status = rank(plain) == rank(aug) ? PlaneSystem::Status::Underdetermined
                                              : PlaneSystem::Status::Inconsistent;
        return out;
    }

    // particular solution with the pivot unknown set to zero (Cramer)
    std::array<Scalar, 4> P;
    Scalar base = minor3(pivot);
    for (int m = 0; m < 4; ++m) P[m] = m == pivot ? Scalar(0) : minor3(pivot, m) / base;

    // |P_abc + t N_abc|^2 = 1
    Scalar qa = N[0] * N[0] + N[1] * N[1] + N[2] * N[2];
    Scalar qb = 2 * (P[0] * N[0] + P[1] * N[1] + P[2] * N[2]);
    Scalar qc = P[0] * P[0] + P[1] * P[1] + P[2] * P[2] - 1;
    out.disc = qb * qb - 4 * qa * qc;

    auto make = [&](const QuadExt& t) {
        Plane pl;
        pl.n = {QuadExt(P[0]) + t * QuadExt(N[0]), QuadExt(P[1]) + t * QuadExt(N[1]),
                QuadExt(P[2]) + t * QuadExt(N[2])};
        pl.d = QuadExt(P[3]) + t * QuadExt(N[3]);
        return pl;
    };
    int s = sgn(out.disc);
    if (s < 0) return out;
    if (s == 0) {
        out.roots.push_back(make(QuadExt(-qb / (2 * qa))));
        return out;
    }
    Scalar inv = 1 / (2 * qa);
    out.roots.push_back(make(QuadExt(-qb * inv, -inv, out.disc)));
    out.roots.push_back(make(QuadExt(-qb * inv, inv, out.disc)));
    return out;
}

std::vector<Plane> planes_orthogonal_to(const Point3& c1, const Scalar& r1, const Point3& c2,
                                        const Scalar& r2, const Point3& g) {
    Point3 D = c1 - c2;
    Point3 h = cross(g, D);
    Scalar dd = norm2(D), hh = norm2(h);
    if (sgn(dd) == 0 || sgn(hh) == 0)
        fail(ErrorKind::ContractViolation, "degenerate auxiliary plane request");
    Scalar alpha = (r1 - r2) / dd;
    Scalar beta2 = (1 - alpha * alpha * dd) / hh;
    std::vector<Plane> out;
    if (sgn(beta2) < 0) return out;
    for (int sgn_beta : {1, -1}) {
        QuadExt beta(0, Scalar(sgn_beta), beta2);
        Plane pl;
        pl.n = {QuadExt(alpha * D.x) + beta * QuadExt(h.x), QuadExt(alpha * D.y) + beta * QuadExt(h.y),
                QuadExt(alpha * D.z) + beta * QuadExt(h.z)};
        pl.d = QuadExt(r1) - dot(pl.n, c1);
        out.push_back(pl);
        if (sgn(beta2) == 0) break;
    }
    return out;
}

}  // namespace APOLLO_NS::detail
