#pragma once

// Bridge between the rational kernel and its copy over Q(eps). Sites cross
// it as plain rationals; `tier` t >= 0 inflates the radius by eps^(t+1), so
// later tiers are infinitesimally smaller than earlier ones.

#include "apollo/shadow.hpp"

#include <gmpxx.h>

#include <array>
#include <string>

namespace apollo::qsp {

struct RawSite {
    std::string id;
    mpq_class x, y, z, r;
    int tier = -1;  // -1: not inflated
};

ConeRelation incone(const std::array<RawSite, 3>& s);
SignPair distance(const std::array<RawSite, 4>& s);
ShadowForm shadow_region(const std::array<RawSite, 4>& s);

}  // namespace apollo::qsp
