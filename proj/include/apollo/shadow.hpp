#pragma once

#include "apollo/trisector.hpp"

namespace apollo {

enum class ExistenceCount { Zero, One, OneDouble, TwoDistinct, Infinite };

enum class ShadowKind { Empty, FullLine, LeftRay, RightRay, Interval, Complement, Degenerate };

// LeftRay = (-inf, phi), RightRay = (chi, +inf), Interval = (chi, phi),
// Complement = (-inf, phi) u (chi, +inf); chi is v_ikja and phi is v_ijka.
// Degenerate carries the raw evidence it was derived from.
struct ShadowForm {
    ShadowKind kind = ShadowKind::Empty;
    TrisectorKind trisector = TrisectorKind::Hyperbolic;
    ExistenceCount existence = ExistenceCount::Zero;
    SignPair dist;  // meaningful for hyperbolic and parabolic trisectors

    bool operator==(const ShadowForm& o) const { return kind == o.kind; }
};

// Why a shadow form is Degenerate: type A has a vertex at an infinity plane
// or an unresolved endpoint, type B a double tangent plane (coincident vertices).
enum class DegeneracyType { None, TypeA, TypeB };

const char* to_string(ExistenceCount e);
const char* to_string(DegeneracyType d);
const char* to_string(ShadowKind k);

// Number of finite endpoints of a non-degenerate shadow form.
int finite_endpoints(ShadowKind k);

}  // namespace apollo

namespace APOLLO_NS {

ExistenceCount existence(const Site& i, const Site& j, const Site& k, const Site& a);
ExistenceCount existence_perturbed(const Site& i, const Site& j, const Site& k, const Site& a);

ShadowForm shadow_region(const Site& i, const Site& j, const Site& k, const Site& a);
ShadowForm shadow_region_perturbed(const Site& i, const Site& j, const Site& k, const Site& a);
DegeneracyType degeneracy_type(const Site& i, const Site& j, const Site& k, const Site& a);

}  // namespace APOLLO_NS
