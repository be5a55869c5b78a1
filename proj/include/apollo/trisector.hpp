#pragma once

#include "apollo/core.hpp"

namespace apollo {

enum class ConeRelation { Outside, Inside, PTouch, CTouch };
enum class TrisectorKind { Hyperbolic, Elliptic, Parabolic };

// (sign against the plane reached as tau -> -inf, sign against tau -> +inf)
struct SignPair {
    Sign first = Sign::Zero;
    Sign second = Sign::Zero;
    bool operator==(const SignPair&) const = default;
};

const char* to_string(ConeRelation c);
const char* to_string(TrisectorKind k);

}  // namespace apollo

namespace APOLLO_NS {

// Position of c against the closed semi-cone spanned by a and b.
ConeRelation incone(const Site& a, const Site& b, const Site& c);
ConeRelation incone_perturbed(const Site& a, const Site& b, const Site& c);

TrisectorKind tritype(const Site& i, const Site& j, const Site& k);

SignPair distance(const Site& i, const Site& j, const Site& k, const Site& a);
SignPair distance_perturbed(const Site& i, const Site& j, const Site& k, const Site& a);

}  // namespace APOLLO_NS
