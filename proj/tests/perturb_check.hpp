#pragma once

// Numeric counterpart of the perturbed predicates: inflate sites by explicit
// rationals 10^-k, 10^-2k, ... in max-weight order (heaviest first) and
// evaluate the plain predicate. A site whose inflation leaves no hyperbolic
// or parabolic trisector is skipped, as in the symbolic version.

#include "apollo/apollo.hpp"
#include "tables.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace pcheck {

using namespace apollo;

inline mpq_class ten_power(int k) {
    mpz_class d = 1;
    for (int n = 0; n < k; ++n) d *= 10;
    return mpq_class(1, d);
}

using Eval = std::function<std::string(const std::vector<Site>&)>;
using Definite = std::function<bool(const std::string&)>;

inline std::optional<std::string> inflated(std::vector<Site> sites, int k, const Eval& eval, const Definite& definite) {
    auto order = max_weight_order(sites);
    int tier = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        auto trial = sites;
        trial[*it].r += ten_power(k * (tier + 1));
        try {
            std::string r = eval(trial);
            sites = trial;
            if (definite(r)) return r;
            ++tier;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::InvalidTrisector) throw;
        }
    }
    return std::nullopt;
}

struct Fixture {
    std::string name;
    std::vector<Site> sites;
    Eval perturbed;  // symbolic limit
    Eval base;       // plain predicate, evaluated on inflated sites
    Definite definite;
};

inline std::string pair_str(SignPair d) { return tables::pair_text(d); }

inline Fixture incone_fixture(std::string name, std::vector<Site> s) {
    return {std::move(name), std::move(s),
            [](const std::vector<Site>& v) { return std::string(to_string(incone_perturbed(v[0], v[1], v[2]))); },
            [](const std::vector<Site>& v) { return std::string(to_string(incone(v[0], v[1], v[2]))); },
            [](const std::string& r) { return r == "Inside" || r == "Outside"; }};
}

inline Fixture distance_fixture(std::string name, std::vector<Site> s) {
    return {std::move(name), std::move(s),
            [](const std::vector<Site>& v) { return pair_str(distance_perturbed(v[0], v[1], v[2], v[3])); },
            [](const std::vector<Site>& v) { return pair_str(distance(v[0], v[1], v[2], v[3])); },
            [](const std::string& r) { return r.find('0') == std::string::npos; }};
}

inline Fixture shadow_fixture(std::string name, std::vector<Site> s) {
    return {std::move(name), std::move(s),
            [](const std::vector<Site>& v) {
                return std::string(to_string(shadow_region_perturbed(v[0], v[1], v[2], v[3]).kind));
            },
            [](const std::vector<Site>& v) {
                return std::string(to_string(shadow_region(v[0], v[1], v[2], v[3]).kind));
            },
            [](const std::string& r) { return r != "Degenerate"; }};
}

inline Fixture existence_fixture(std::string name, std::vector<Site> s) {
    return {std::move(name), std::move(s),
            [](const std::vector<Site>& v) {
                return std::string(to_string(existence_perturbed(v[0], v[1], v[2], v[3])));
            },
            [](const std::vector<Site>& v) {
                // the finite endpoints of the inflated shadow, as the perturbed count
                auto f = shadow_region(v[0], v[1], v[2], v[3]).kind;
                if (f == ShadowKind::Degenerate) return std::string("Degenerate");
                int n = finite_endpoints(f);
                return std::string(n == 0 ? "Zero" : n == 1 ? "One" : "TwoDistinct");
            },
            [](const std::string& r) { return r != "Degenerate"; }};
}

inline std::vector<Site> sites_of(const tables::Row& r) {
    std::vector<Site> s;
    for (std::size_t n = 0; n < r.sites.size(); ++n) s.push_back(tables::site_at(r, n));
    return s;
}

// Every degenerate fixture of the suite.
inline std::vector<Fixture> fixtures() {
    auto S = [](const char* id, const char* x, const char* y, const char* z, const char* r) {
        return make_site(id, x, y, z, r);
    };
    Site i = S("i", "0", "0", "0", "1"), j = S("j", "2", "0", "0", "1"), k = S("k", "1", "2", "0", "1");
    Site pi = S("i", "0", "0", "0", "2"), pj = S("j", "8", "0", "0", "2"), pk = S("k", "4", "3/2", "0", "1/2");
    Site both = S("a", "1", "3/4", "0", "1");
    std::vector<Fixture> out{
        incone_fixture("incone touching generator", {S("a", "0", "0", "0", "1"), S("b", "6", "0", "0", "1"), S("c", "3", "1/2", "0", "1/2")}),
        incone_fixture("incone touching generator behind apex", {S("a", "0", "0", "0", "1"), S("b", "6", "0", "0", "1"), S("c", "-3", "1/2", "0", "1/2")}),
        incone_fixture("incone collinear touch", {S("a", "0", "0", "0", "1"), S("b", "6", "0", "0", "1"), S("c", "3", "0", "0", "1")}),
        distance_fixture("distance tangent to both planes", {i, j, k, both}),
        shadow_fixture("shadow tangent to both planes", {i, j, k, both}),
        existence_fixture("existence tangent to both planes", {i, j, k, both}),
        existence_fixture("existence cocircular", {S("i", "0", "0", "0", "1"), S("j", "2", "0", "0", "1"), S("k", "2", "2", "0", "1"), S("a", "0", "2", "0", "1")}),
        // parabolic trisector: the single tangent plane is y = 2
        distance_fixture("parabolic distance tangent", {pi, pj, pk, S("a", "1", "1", "5", "1")}),
        shadow_fixture("parabolic shadow tangent", {pi, pj, pk, S("a", "1", "1", "5", "1")}),
        shadow_fixture("parabolic shadow one vertex, closing", {pi, pj, pk, S("a", "11", "1/2", "11/2", "3/2")}),
        shadow_fixture("parabolic shadow one vertex, opening", {pi, pj, pk, S("a", "12", "-1", "-2", "3")}),
        existence_fixture("parabolic existence one vertex", {pi, pj, pk, S("a", "12", "-1", "-2", "3")}),
    };
    for (const auto& r : tables::degenerate_rows()) {
        out.push_back(distance_fixture("distance " + r.table + " " + r.row, sites_of(r)));
        out.push_back(shadow_fixture("shadow " + r.table + " " + r.row, sites_of(r)));
    }
    return out;
}

struct Outcome {
    bool ok = true;
    std::string detail;
};

// The perturbed answer must equal the inflated one for every k in [lo, hi].
inline Outcome check(const Fixture& f, int lo = 6, int hi = 12) {
    Outcome o;
    std::string want;
    try {
        std::string plain = f.base(f.sites);
        if (f.definite(plain)) return {false, f.name + ": not degenerate (" + plain + ")"};
    } catch (const Error&) {
        // a plain predicate may refuse a degenerate input outright
    }
    try {
        want = f.perturbed(f.sites);
    } catch (const std::exception& e) {
        return {false, f.name + ": perturbed threw " + e.what()};
    }
    for (int k = lo; k <= hi; ++k) {
        std::optional<std::string> got;
        try {
            got = inflated(f.sites, k, f.base, f.definite);
        } catch (const std::exception& e) {
            return {false, f.name + ": inflated k=" + std::to_string(k) + " threw " + e.what()};
        }
        if (!got || *got != want) {
            o.ok = false;
            o.detail = f.name + ": perturbed " + want + ", inflated k=" + std::to_string(k) + " " +
                       (got ? *got : std::string("unresolved"));
            return o;
        }
    }
    o.detail = f.name + ": " + want;
    return o;
}

}  // namespace pcheck
