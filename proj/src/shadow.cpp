#include "apollo/shadow.hpp"

#include "apollo/errors.hpp"
#include "kernel.hpp"

#include <optional>

#ifndef APOLLO_EPSILON_FIELD

namespace apollo {

const char* to_string(ExistenceCount e) {
    switch (e) {
        case ExistenceCount::Zero: return "Zero";
        case ExistenceCount::One: return "One";
        case ExistenceCount::OneDouble: return "OneDouble";
        case ExistenceCount::TwoDistinct: return "TwoDistinct";
        case ExistenceCount::Infinite: return "Infinite";
    }
    return "?";
}

const char* to_string(ShadowKind k) {
    switch (k) {
        case ShadowKind::Empty: return "Empty";
        case ShadowKind::FullLine: return "FullLine";
        case ShadowKind::LeftRay: return "LeftRay";
        case ShadowKind::RightRay: return "RightRay";
        case ShadowKind::Interval: return "Interval";
        case ShadowKind::Complement: return "Complement";
        case ShadowKind::Degenerate: return "Degenerate";
    }
    return "?";
}

const char* to_string(DegeneracyType d) {
    switch (d) {
        case DegeneracyType::None: return "None";
        case DegeneracyType::TypeA: return "TypeA";
        case DegeneracyType::TypeB: return "TypeB";
    }
    return "?";
}

int finite_endpoints(ShadowKind k) {
    switch (k) {
        case ShadowKind::Empty:
        case ShadowKind::FullLine: return 0;
        case ShadowKind::LeftRay:
        case ShadowKind::RightRay: return 1;
        case ShadowKind::Interval:
        case ShadowKind::Complement: return 2;
        case ShadowKind::Degenerate: break;
    }
    fail(ErrorKind::ContractViolation, "finite_endpoints of a degenerate shadow form");
}

}  // namespace apollo

#endif

namespace APOLLO_NS {

namespace detail {

// a hides one of i, j, k, or is hidden by one: the shadow is decided without
// any tangent-plane computation.
std::optional<ShadowKind> nested_form(const Site& i, const Site& j, const Site& k, const Site& a) {
    for (const Site* s : {&i, &j, &k}) {
        if (is_hidden(a, *s)) return ShadowKind::Empty;
        if (is_hidden(*s, a)) {
            // strict containment: every tangency point of s is interior to a
            Scalar gap = a.r - s->r;
            return norm2(a.c - s->c) < gap * gap ? ShadowKind::FullLine : ShadowKind::Degenerate;
        }
    }
    return std::nullopt;
}

}  // namespace detail

ExistenceCount existence(const Site& i, const Site& j, const Site& k, const Site& a) {
    if (detail::nested_form(i, j, k, a)) return ExistenceCount::Zero;
    return detail::solve_four(i, j, k, a).count;
}

namespace detail {

ShadowKind table_form(ExistenceCount e, SignPair d) {
    using S = Sign;
    if (e == ExistenceCount::Zero) {
        if (d == SignPair{S::Positive, S::Positive}) return ShadowKind::Empty;
        if (d == SignPair{S::Negative, S::Negative}) return ShadowKind::FullLine;
    } else if (e == ExistenceCount::One) {
        if (d == SignPair{S::Positive, S::Negative}) return ShadowKind::RightRay;
        if (d == SignPair{S::Negative, S::Positive}) return ShadowKind::LeftRay;
    } else if (e == ExistenceCount::TwoDistinct) {
        if (d == SignPair{S::Positive, S::Positive}) return ShadowKind::Interval;
        if (d == SignPair{S::Negative, S::Negative}) return ShadowKind::Complement;
    }
    return ShadowKind::Degenerate;
}

Sign reference_membership(const Site& i, const Site& j, const Site& k, const Site& a) {
    const Site* pole = nullptr;
    Plane pl;
    if (!reference_plane(i, j, k, pole, pl)) return Sign::Zero;
    return membership(pl, *pole, a);
}

}  // namespace detail

ShadowForm shadow_region(const Site& i, const Site& j, const Site& k, const Site& a) {
    ShadowForm f;
    f.trisector = tritype(i, j, k);
    if (auto nested = detail::nested_form(i, j, k, a)) {
        f.kind = *nested;
        return f;
    }
    f.existence = existence(i, j, k, a);
    if (f.trisector == TrisectorKind::Elliptic) {
        if (f.existence == ExistenceCount::TwoDistinct) {
            f.kind = ShadowKind::Interval;
        } else if (f.existence == ExistenceCount::Zero) {
            Sign s = detail::reference_membership(i, j, k, a);
            f.kind = s == Sign::Negative ? ShadowKind::FullLine
                                         : (s == Sign::Positive ? ShadowKind::Empty : ShadowKind::Degenerate);
        } else {
            f.kind = ShadowKind::Degenerate;
        }
        return f;
    }
    f.dist = distance(i, j, k, a);
    f.kind = detail::table_form(f.existence, f.dist);
    if (f.trisector == TrisectorKind::Parabolic &&
        (f.kind == ShadowKind::LeftRay || f.kind == ShadowKind::RightRay))
        f.kind = ShadowKind::Degenerate;
    return f;
}

DegeneracyType degeneracy_type(const Site& i, const Site& j, const Site& k, const Site& a) {
    if (shadow_region(i, j, k, a).kind != ShadowKind::Degenerate) return DegeneracyType::None;
    if (detail::nested_form(i, j, k, a)) return DegeneracyType::TypeA;
    auto fs = detail::solve_four(i, j, k, a);
    bool double_plane = fs.status == detail::PlaneSystem::Status::Ok && sgn(fs.disc) == 0;
    return double_plane ? DegeneracyType::TypeB : DegeneracyType::TypeA;
}

}  // namespace APOLLO_NS
