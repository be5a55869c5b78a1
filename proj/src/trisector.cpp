#include "apollo/trisector.hpp"

#include "apollo/errors.hpp"
#include "planes.hpp"
#include "trisector_internal.hpp"

#ifndef APOLLO_EPSILON_FIELD

namespace apollo {

const char* to_string(ConeRelation c) {
    switch (c) {
        case ConeRelation::Outside: return "Outside";
        case ConeRelation::Inside: return "Inside";
        case ConeRelation::PTouch: return "PTouch";
        case ConeRelation::CTouch: return "CTouch";
    }
    return "?";
}

const char* to_string(TrisectorKind k) {
    switch (k) {
        case TrisectorKind::Hyperbolic: return "Hyperbolic";
        case TrisectorKind::Elliptic: return "Elliptic";
        case TrisectorKind::Parabolic: return "Parabolic";
    }
    return "?";
}

}  // namespace apollo

#endif

namespace APOLLO_NS {

ConeRelation incone(const Site& a, const Site& b, const Site& c) {
    // Minimum over the common tangent planes of a and b of the signed
    // distance of c, scaled by |D_ab|^2: X - sqrt(Y).
    Point3 dab = b.c - a.c, dac = c.c - a.c;
    Scalar rab = b.r - a.r, rac = c.r - a.r;
    Scalar nab = norm2(dab);
    if (nab <= rab * rab)
        fail(ErrorKind::ContainmentViolation, "incone: '" + a.id + "' and '" + b.id + "' are nested");
    Point3 cr = cross(dab, dac);
    Scalar X = rab * dot(dab, dac) - rac * nab;
    Scalar Y = (nab - rab * rab) * norm2(cr);
    Sign m = QuadExt(X, Scalar(-1), Y).sign();
    if (m == Sign::Positive) return ConeRelation::Inside;
    if (m == Sign::Negative) return ConeRelation::Outside;
    return is_zero(cr) ? ConeRelation::CTouch : ConeRelation::PTouch;
}

TrisectorKind tritype(const Site& i, const Site& j, const Site& k) {
    ConeRelation r[3] = {incone(i, j, k), incone(j, k, i), incone(k, i, j)};
    for (auto c : r)
        if (c == ConeRelation::Inside) return TrisectorKind::Elliptic;
    for (auto c : r)
        if (c != ConeRelation::Outside) return TrisectorKind::Parabolic;
    return TrisectorKind::Hyperbolic;
}

namespace detail {

TangentPlanes tangent_planes(const Site& i, const Site& j, const Site& k) {
    TangentPlanes out;
    PlaneSystem sys = unit_planes({i.c, j.c, k.c}, {i.r, j.r, k.r});
    if (sys.status != PlaneSystem::Status::Ok || sys.roots.empty())
        fail(ErrorKind::InvalidTrisector, "no tangent planes: trisector of '" + i.id + "', '" + j.id +
                                              "', '" + k.id + "' is elliptic");
    if (sys.roots.size() == 1) {
        out.minus = out.plus = sys.roots[0];
        out.parabolic = true;
        return out;
    }
    Point3 W = cross(j.c - i.c, k.c - i.c);
    // the plane reached at tau -> +inf has its normal (pointing at the
    // centers) against W
    Sign s0 = dot(sys.roots[0].n, W).sign();
    if (s0 == Sign::Negative) {
        out.plus = sys.roots[0];
        out.minus = sys.roots[1];
    } else {
        out.plus = sys.roots[1];
        out.minus = sys.roots[0];
    }
    return out;
}

Sign plane_distance(const Plane& pl, const Site& a) {
    return (pl.eval(a.c) - QuadExt(a.r)).sign();
}

}  // namespace detail

SignPair distance(const Site& i, const Site& j, const Site& k, const Site& a) {
    if (tritype(i, j, k) == TrisectorKind::Elliptic)
        fail(ErrorKind::InvalidTrisector, "distance: elliptic trisector");
    auto tp = detail::tangent_planes(i, j, k);
    return {detail::plane_distance(tp.minus, a), detail::plane_distance(tp.plus, a)};
}

}  // namespace APOLLO_NS
