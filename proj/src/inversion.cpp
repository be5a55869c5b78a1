#include "apollo/inversion.hpp"

#include "apollo/errors.hpp"

namespace APOLLO_NS {

InvertedSite invert(const Site& s, const Site& pole) {
    if (s.same_sphere(pole))
        fail(ErrorKind::ContractViolation, "site '" + s.id + "' coincides with the pole");
    Scalar p = pbar(pole, s);
    if (sgn(p) <= 0)
        fail(ErrorKind::ContainmentViolation,
             "site '" + s.id + "' and pole '" + pole.id + "' contain one another");
    Point3 d = s.c - pole.c;
    return {d.x / p, d.y / p, d.z / p, (s.r - pole.r) / p, p, s.id, pole.id};
}

std::vector<InvertedSite> invert(std::span<const Site> sites, const Site& pole) {
    std::vector<InvertedSite> out;
    out.reserve(sites.size());
    for (const auto& s : sites) out.push_back(invert(s, pole));
    return out;
}

Scalar minor_d(std::span<const InvertedSite> sites, std::string_view cols) {
    std::string c(cols);
    if (c.size() + 1 == sites.size()) c.push_back('1');
    if (c.size() != sites.size()) fail(ErrorKind::ContractViolation, "minor request is not square");
    std::vector<std::vector<Scalar>> m;
    for (const auto& s : sites) {
        auto& row = m.emplace_back();
        for (char ch : c) {
            switch (ch) {
                case 'u': row.push_back(s.u); break;
                case 'v': row.push_back(s.v); break;
                case 'w': row.push_back(s.w); break;
                case 'p': row.push_back(s.rho); break;
                case '1': row.push_back(1); break;
                default:
                    fail(ErrorKind::ContractViolation,
                         std::string("unknown inverted coordinate '") + ch + "'");
            }
        }
    }
    return det(std::move(m));
}

}  // namespace APOLLO_NS
