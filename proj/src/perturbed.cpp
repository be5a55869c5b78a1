// Perturbed predicates: the limit of the base predicate when sites are
// inflated infinitesimally in max-weight order. Each limit is evaluated
// exactly by the kernel instantiated over Q(eps).

#include "apollo/errors.hpp"
#include "apollo/shadow.hpp"
#include "apollo/trisector.hpp"
#include "qsp.hpp"

#include <vector>

namespace apollo {

namespace {

template <std::size_t N>
std::array<qsp::RawSite, N> raw_sites(const std::array<const Site*, N>& sites) {
    std::array<qsp::RawSite, N> raw;
    for (std::size_t n = 0; n < N; ++n)
        raw[n] = {sites[n]->id, sites[n]->c.x, sites[n]->c.y, sites[n]->c.z, sites[n]->r, -1};
    return raw;
}

// Inflates the heaviest site, then the next heaviest by a smaller amount,
// until `resolved` accepts the outcome. A perturbation that turns the
// trisector elliptic (no tangent planes left to measure) is skipped.
template <std::size_t N, class Eval, class Accept>
auto resolve(const std::array<const Site*, N>& sites, Eval eval, Accept resolved, const char* what) {
    auto raw = raw_sites(sites);
    std::vector<Site> copy;
    for (const Site* s : sites) copy.push_back(*s);
    auto order = max_weight_order(copy);
    int tier = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        raw[*it].tier = tier;
        try {
            auto r = eval(raw);
            if (resolved(r)) return r;
            ++tier;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::InvalidTrisector) throw;
            raw[*it].tier = -1;
        }
    }
    fail(ErrorKind::ContractViolation, std::string(what) + ": perturbation does not resolve the degeneracy");
}

bool definite(ConeRelation c) { return c == ConeRelation::Outside || c == ConeRelation::Inside; }
bool definite(const SignPair& d) { return d.first != Sign::Zero && d.second != Sign::Zero; }

}  // namespace

ConeRelation incone_perturbed(const Site& a, const Site& b, const Site& c) {
    ConeRelation base = incone(a, b, c);
    if (definite(base)) return base;
    return resolve<3>({&a, &b, &c}, [](const auto& s) { return qsp::incone(s); },
                      [](ConeRelation r) { return definite(r); }, "incone_perturbed");
}

SignPair distance_perturbed(const Site& i, const Site& j, const Site& k, const Site& a) {
    SignPair base = distance(i, j, k, a);
    if (definite(base)) return base;
    return resolve<4>({&i, &j, &k, &a}, [](const auto& s) { return qsp::distance(s); },
                      [](const SignPair& r) { return definite(r); }, "distance_perturbed");
}

ShadowForm shadow_region_perturbed(const Site& i, const Site& j, const Site& k, const Site& a) {
    ShadowForm base = shadow_region(i, j, k, a);
    if (base.kind != ShadowKind::Degenerate) return base;
    ShadowForm f = resolve<4>({&i, &j, &k, &a}, [](const auto& s) { return qsp::shadow_region(s); },
                              [](const ShadowForm& r) { return r.kind != ShadowKind::Degenerate; },
                              "shadow_region_perturbed");
    // report the trisector of the unperturbed input
    f.trisector = base.trisector;
    return f;
}

ExistenceCount existence_perturbed(const Site& i, const Site& j, const Site& k, const Site& a) {
    switch (finite_endpoints(shadow_region_perturbed(i, j, k, a).kind)) {
        case 0: return ExistenceCount::Zero;
        case 1: return ExistenceCount::One;
        default: return ExistenceCount::TwoDistinct;
    }
}

}  // namespace apollo
