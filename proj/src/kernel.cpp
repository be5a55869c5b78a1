#include "kernel.hpp"

#include "apollo/errors.hpp"
#include "apollo/inversion.hpp"

namespace APOLLO_NS::detail {

const Site& lightest(std::initializer_list<const Site*> sites) {
    const Site* best = *sites.begin();
    for (const Site* s : sites)
        if (lighter(*s, *best)) best = s;
    return *best;
}

const Root* FourSolve::vertex(Sign label) const {
    for (const auto& r : roots)
        if (r.d_sign == Sign::Positive && (r.label == label || count == ExistenceCount::OneDouble))
            return &r;
    return nullptr;
}

namespace {

Vec3Q foot(const InvertedSite& s, const Plane& pl) {
    // tangency point of the plane with the inverted sphere: C - rho n
    QuadExt rho(s.rho);
    return {QuadExt(s.u) - rho * pl.n.x, QuadExt(s.v) - rho * pl.n.y, QuadExt(s.w) - rho * pl.n.z};
}

}  // namespace

FourSolve solve_four(const Site& i, const Site& j, const Site& k, const Site& a) {
    const std::array<const Site*, 4> sites{&i, &j, &k, &a};
    FourSolve out;
    out.pole = &lightest({&i, &j, &k, &a});
    int pole_pos = 0;
    for (int n = 0; n < 4; ++n)
        if (sites[n] == out.pole) pole_pos = n;

    std::array<InvertedSite, 3> inv;
    std::array<Point3, 3> centers;
    std::array<Scalar, 3> radii;
    for (int n = 0, m = 0; n < 4; ++n) {
        if (n == pole_pos) continue;
        inv[m] = invert(*sites[n], *out.pole);
        centers[m] = inv[m].center();
        radii[m] = inv[m].rho;
        ++m;
    }
    PlaneSystem sys = unit_planes(centers, radii);
    out.status = sys.status;
    out.disc = sys.disc;
    if (sys.status == PlaneSystem::Status::Underdetermined) {
        out.count = ExistenceCount::Infinite;
        return out;
    }
    if (sys.status == PlaneSystem::Status::Inconsistent) return out;

    // T*_n = V + (R + r_pole) u_n; the pole's own point is the pole center
    // (origin), the others are inversions of the plane's tangency feet. The
    // orientation of four points with one at the origin is
    // (-1)^(position + 1) det of the other three; positive scalings of
    // rows (1/|foot|^2) do not change the sign.
    const Sign pos_factor = (pole_pos % 2 == 0) ? Sign::Negative : Sign::Positive;
    int finite = 0;
    for (const auto& pl : sys.roots) {
        Root r{pl, pl.d.sign(), Sign::Zero};
        r.label = pos_factor * det3(foot(inv[0], pl), foot(inv[1], pl), foot(inv[2], pl)).sign();
        if (r.d_sign == Sign::Positive) ++finite;
        out.roots.push_back(r);
    }
    if (sys.roots.size() == 1)
        out.count = finite ? ExistenceCount::OneDouble : ExistenceCount::Zero;
    else
        out.count = finite == 2 ? ExistenceCount::TwoDistinct
                                : (finite == 1 ? ExistenceCount::One : ExistenceCount::Zero);
    return out;
}

Sign membership(const Plane& pl, const Site& pole, const Site& b) {
    // d (|V - C_b|^2 - (R + r_b)^2) = n.xbar + d pbar - rbar, valid while
    // R + r_b = 1/(2d) + rbar >= 0; otherwise b cannot reach the ball.
    Point3 xb = b.c - pole.c;
    Scalar rb = b.r - pole.r;
    QuadExt reach = QuadExt(Scalar(1)) + pl.d * QuadExt(Scalar(2 * rb));
    if (reach.sign() == Sign::Negative) return Sign::Positive;
    QuadExt val = dot(pl.n, xb) + pl.d * QuadExt(pbar(pole, b)) - QuadExt(rb);
    return val.sign();
}

bool reference_plane(const Site& i, const Site& j, const Site& k, const Site*& pole, Plane& out) {
    pole = &lightest({&i, &j, &k});
    std::vector<const Site*> rest;
    for (const Site* s : {&i, &j, &k})
        if (s != pole) rest.push_back(s);
    InvertedSite s1 = invert(*rest[0], *pole), s2 = invert(*rest[1], *pole);
    Point3 c1 = s1.center(), c2 = s2.center();
    Point3 g = cross(c1, c2);
    if (is_zero(g)) {
        Point3 D = c1 - c2;
        for (const Point3& e : {Point3{1, 0, 0}, Point3{0, 1, 0}, Point3{0, 0, 1}}) {
            g = cross(D, e);
            if (!is_zero(g)) break;
        }
    }
    for (const auto& pl : planes_orthogonal_to(c1, s1.rho, c2, s2.rho, g)) {
        if (pl.d.sign() == Sign::Positive) {
            out = pl;
            return true;
        }
    }
    return false;
}

void back_map(const Plane& pl, const Site& pole, QuadExt& x, QuadExt& y, QuadExt& z, QuadExt& w) {
    // V = pole - n / (2d)  ->  (2d pole - n : 2d)
    QuadExt two_d = pl.d * QuadExt(Scalar(2));
    x = two_d * QuadExt(pole.c.x) - pl.n.x;
    y = two_d * QuadExt(pole.c.y) - pl.n.y;
    z = two_d * QuadExt(pole.c.z) - pl.n.z;
    w = two_d;
}

}  // namespace APOLLO_NS::detail
