#include "apollo/core.hpp"

#include "apollo/errors.hpp"

#include <algorithm>
#include <numeric>

namespace APOLLO_NS {

Site make_site(std::string id, std::string_view x, std::string_view y, std::string_view z,
               std::string_view r) {
    Site s{std::move(id), {parse_scalar(x), parse_scalar(y), parse_scalar(z)}, parse_scalar(r)};
    if (sgn(s.r) < 0) fail(ErrorKind::ParseError, "negative radius for site '" + s.id + "'");
    return s;
}

Scalar det(std::vector<std::vector<Scalar>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) fail(ErrorKind::ContractViolation, "determinant of a non-square matrix");
    Scalar result = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && sgn(m[piv][col]) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            result = -result;
        }
        result *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (sgn(m[r][col]) == 0) continue;
            Scalar f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return result;
}

Sign orient(const Point3& k, const Point3& l, const Point3& m, const Point3& n) {
    // rows (x,y,z,1); subtracting K from the rest leaves -det[L-K; M-K; N-K]
    Point3 a = l - k, b = m - k, c = n - k;
    return -sign_of(dot(a, cross(b, c)));
}

namespace {

std::string with_ones(std::string_view cols, std::size_t rows) {
    std::string c(cols);
    if (c.size() + 1 == rows) c.push_back('1');
    if (c.size() != rows) fail(ErrorKind::ContractViolation, "minor request is not square");
    return c;
}

Scalar coord(const Site& s, char c) {
    switch (c) {
        case 'x': return s.c.x;
        case 'y': return s.c.y;
        case 'z': return s.c.z;
        case 'r': return s.r;
        case '1': return 1;
    }
    fail(ErrorKind::ContractViolation, std::string("unknown coordinate letter '") + c + "'");
}

}  // namespace

Scalar minor_d(std::span<const Site> sites, std::string_view cols) {
    std::string c = with_ones(cols, sites.size());
    std::vector<std::vector<Scalar>> m;
    for (const auto& s : sites) {
        auto& row = m.emplace_back();
        for (char ch : c) row.push_back(coord(s, ch));
    }
    return det(std::move(m));
}

Scalar pbar(const Site& pole, const Site& s) {
    Point3 d = s.c - pole.c;
    Scalar rr = s.r - pole.r;
    return norm2(d) - rr * rr;
}

Scalar minor_e(const Site& pole, std::span<const Site> sites, std::string_view cols) {
    std::string c = with_ones(cols, sites.size());
    std::vector<std::vector<Scalar>> m;
    for (const auto& s : sites) {
        auto& row = m.emplace_back();
        Point3 d = s.c - pole.c;
        for (char ch : c) {
            switch (ch) {
                case 'x': row.push_back(d.x); break;
                case 'y': row.push_back(d.y); break;
                case 'z': row.push_back(d.z); break;
                case 'r': row.push_back(s.r - pole.r); break;
                case 'p': row.push_back(pbar(pole, s)); break;
                case '1': row.push_back(1); break;
                default:
                    fail(ErrorKind::ContractViolation,
                         std::string("unknown barred coordinate '") + ch + "'");
            }
        }
    }
    return det(std::move(m));
}

bool is_hidden(const Site& a, const Site& b) {
    Scalar gap = b.r - a.r;
    if (sgn(gap) < 0) return false;
    return norm2(a.c - b.c) <= gap * gap;
}

Sign compare_distance(const Site& q, const Site& a, const Site& b) {
    // sgn(|qa| - r_a - |qb| + r_b) = sgn(sqrt(A) - sqrt(B) + t)
    Scalar A = norm2(q.c - a.c), B = norm2(q.c - b.c), t = b.r - a.r;
    Sign roots = sign_of(Scalar(A - B));  // sign of sqrt(A) - sqrt(B)
    Sign st = sign_of(t);
    if (roots == Sign::Zero) return st;
    if (st == Sign::Zero || st == roots) return roots;
    // sqrt(A) - sqrt(B) vs -t: square (A + B - t^2) vs 2 sqrt(AB)
    Scalar s = A + B - t * t;
    Sign cmp;  // sgn((sqrt(A)-sqrt(B))^2 - t^2) = sgn(s - 2 sqrt(AB))
    if (sgn(s) < 0)
        cmp = Sign::Negative;
    else if (sgn(s) == 0)
        cmp = sgn(A * B) == 0 ? Sign::Zero : Sign::Negative;
    else
        cmp = sign_of(Scalar(s * s - 4 * A * B));
    if (cmp == Sign::Zero) return Sign::Zero;
    return cmp == Sign::Positive ? roots : st;
}

bool lighter(const Site& a, const Site& b) {
    if (a.r != b.r) return a.r < b.r;
    if (a.c.x != b.c.x) return a.c.x < b.c.x;
    if (a.c.y != b.c.y) return a.c.y < b.c.y;
    return a.c.z < b.c.z;
}

std::vector<std::size_t> max_weight_order(std::span<const Site> sites) {
    std::vector<std::size_t> idx(sites.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return lighter(sites[a], sites[b]); });
    return idx;
}

}  // namespace APOLLO_NS
