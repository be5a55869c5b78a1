// Compiled over Q(eps) only.
#include "qsp.hpp"

#include "apollo/shadow.hpp"
#include "apollo/trisector.hpp"

namespace apollo::qsp {

namespace {

eps::Site lift(const RawSite& s) {
    eps::Scalar r(s.r);
    if (s.tier >= 0) r += Rational::eps_power(static_cast<std::size_t>(s.tier) + 1);
    return eps::Site{s.id, {eps::Scalar(s.x), eps::Scalar(s.y), eps::Scalar(s.z)}, r};
}

}  // namespace

ConeRelation incone(const std::array<RawSite, 3>& s) { return eps::incone(lift(s[0]), lift(s[1]), lift(s[2])); }

SignPair distance(const std::array<RawSite, 4>& s) {
    return eps::distance(lift(s[0]), lift(s[1]), lift(s[2]), lift(s[3]));
}

ShadowForm shadow_region(const std::array<RawSite, 4>& s) {
    return eps::shadow_region(lift(s[0]), lift(s[1]), lift(s[2]), lift(s[3]));
}

}  // namespace apollo::qsp
