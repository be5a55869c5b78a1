#pragma once

// Invariance of exact outcomes under rigid motions and radius shifts, and
// the inverted-space / pole-relative determinant bridge.
//
// Odd transforms (a transposition of axes, a reflection) reverse the
// orientation of every trisector: chi and phi trade places, so left/right
// outcomes swap and edges are re-expressed with their endpoints exchanged.

#include "apollo/apollo.hpp"
#include "apollo/sampling.hpp"

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace inv {

using namespace apollo;

using Eval = std::function<std::string(const std::vector<Site>&, bool odd)>;

struct Predicate {
    std::string name;
    int sites;
    std::function<bool(const std::vector<Site>&)> accept;
    Eval eval;  // outcome expressed in the original frame
};

inline std::string guarded(const std::function<std::string()>& f) {
    try {
        return f();
    } catch (const Error& e) {
        return std::string("error:") + to_string(e.kind());
    }
}

inline std::string swap_lr(std::string s) {
    auto swap_words = [&](const std::string& a, const std::string& b) {
        std::string out;
        for (std::size_t p = 0; p < s.size();) {
            if (s.compare(p, a.size(), a) == 0) {
                out += b;
                p += a.size();
            } else if (s.compare(p, b.size(), b) == 0) {
                out += a;
                p += b.size();
            } else {
                out += s[p++];
            }
        }
        s = out;
    };
    swap_words("Left", "Right");
    return s;
}

inline std::string pair_str(SignPair d, bool odd) {
    if (odd) std::swap(d.first, d.second);
    return std::string(to_string(d.first)) + "," + to_string(d.second);
}

inline std::string order_str(VertexOrdering o, bool odd) {
    if (odd) {
        std::reverse(o.begin(), o.end());
        for (auto& v : o) v.label = v.label == VertexLabelKind::Vijka ? VertexLabelKind::Vikja : VertexLabelKind::Vijka;
    }
    std::string out;
    for (const auto& v : o) out += std::string(v.label == VertexLabelKind::Vijka ? "phi_" : "chi_") + v.site + " ";
    return out;
}

inline std::vector<Predicate> predicates() {
    using V = const std::vector<Site>&;
    auto any = [](V) { return true; };
    auto hyperbolic = [](V s) { return guarded([&] { return std::string(to_string(tritype(s[0], s[1], s[2]))); }) == "Hyperbolic"; };
    auto with_vertex = [](V s) {
        return guarded([&] {
                   vertex_coordinates(s[0], s[1], s[2], s[3], VertexLabelKind::Vijka);
                   return std::string("ok");
               }) == "ok";
    };
    auto orderable = [hyperbolic](V s) {
        if (!hyperbolic(s)) return false;
        for (int n : {3, 4}) {
            auto f = shadow_region(s[0], s[1], s[2], s[n]).kind;
            if (f == ShadowKind::Empty || f == ShadowKind::FullLine || f == ShadowKind::Degenerate) return false;
        }
        return true;
    };
    auto valid_edge = [](V s) { return guarded([&] { return std::string(validate_edge(s[0], s[1], s[2], s[3], s[4]) ? "y" : "n"); }) == "y"; };
    auto right_edge = [hyperbolic](V s) {
        return hyperbolic(s) && guarded([&] { return std::string(to_string(infinite_right_edge_conflict(s[0], s[1], s[2], s[3], s[4]))); }).rfind("error", 0) != 0;
    };
    auto left_edge = [hyperbolic](V s) {
        return hyperbolic(s) && guarded([&] { return std::string(to_string(infinite_left_edge_conflict(s[0], s[1], s[2], s[3], s[4]))); }).rfind("error", 0) != 0;
    };
    return {
        {"incone", 3, any, [](V s, bool) { return guarded([&] { return std::string(to_string(incone(s[0], s[1], s[2]))); }); }},
        {"tritype", 3, any, [](V s, bool) { return guarded([&] { return std::string(to_string(tritype(s[0], s[1], s[2]))); }); }},
        {"distance", 4, hyperbolic, [](V s, bool odd) { return guarded([&] { return pair_str(distance(s[0], s[1], s[2], s[3]), odd); }); }},
        {"existence", 4, any, [](V s, bool) { return guarded([&] { return std::string(to_string(existence(s[0], s[1], s[2], s[3]))); }); }},
        {"shadow_region", 4, any,
         [](V s, bool odd) {
             return guarded([&] {
                 std::string r = to_string(shadow_region(s[0], s[1], s[2], s[3]).kind);
                 return odd ? swap_lr(r) : r;
             });
         }},
        {"insphere", 5, with_vertex,
         [](V s, bool odd) {
             return guarded([&] {
                 return std::string(to_string(odd ? insphere(s[0], s[2], s[1], s[3], s[4]) : insphere(s[0], s[1], s[2], s[3], s[4])));
             });
         }},
        {"order", 5, orderable, [](V s, bool odd) { return guarded([&] { return order_str(order(s[0], s[1], s[2], s[3], s[4]), odd); }); }},
        {"edge_conflict", 6, valid_edge,
         [](V s, bool odd) {
             return guarded([&] {
                 if (!odd) return std::string(to_string(edge_conflict(s[0], s[1], s[2], s[3], s[4], s[5])));
                 return swap_lr(to_string(edge_conflict(s[0], s[1], s[2], s[4], s[3], s[5])));
             });
         }},
        {"infinite_right_edge_conflict", 5, right_edge,
         [](V s, bool odd) {
             return guarded([&] {
                 if (!odd) return std::string(to_string(infinite_right_edge_conflict(s[0], s[1], s[2], s[3], s[4])));
                 return swap_lr(to_string(infinite_left_edge_conflict(s[0], s[1], s[2], s[3], s[4])));
             });
         }},
        {"infinite_left_edge_conflict", 5, left_edge,
         [](V s, bool odd) {
             return guarded([&] {
                 if (!odd) return std::string(to_string(infinite_left_edge_conflict(s[0], s[1], s[2], s[3], s[4])));
                 return swap_lr(to_string(infinite_right_edge_conflict(s[0], s[1], s[2], s[3], s[4])));
             });
         }},
    };
}

struct Transform {
    std::string name;
    bool odd;
    std::function<Site(const Site&)> apply;
};

inline std::vector<Transform> transforms(std::mt19937_64& rng, const std::vector<Site>& s) {
    std::uniform_int_distribution<int> num(-40, 40), den(1, 7);
    auto q = [&] { return mpq_class(num(rng), den(rng)); };
    Point3 t{q(), q(), q()};
    mpq_class rmin = s[0].r;
    for (const auto& x : s) rmin = std::min(rmin, x.r);
    // shift within (-rmin, 3]: radii stay positive
    mpq_class shift = std::uniform_int_distribution<int>(0, 1)(rng) ? mpq_class(num(rng) + 41, 27) : -rmin / 2;
    return {
        {"translation", false, [t](const Site& x) { return Site{x.id, {x.c.x + t.x, x.c.y + t.y, x.c.z + t.z}, x.r}; }},
        {"axis rotation", false, [](const Site& x) { return Site{x.id, {x.c.y, x.c.z, x.c.x}, x.r}; }},
        {"axis transposition", true, [](const Site& x) { return Site{x.id, {x.c.y, x.c.x, x.c.z}, x.r}; }},
        {"reflection", true, [](const Site& x) { return Site{x.id, {x.c.x, x.c.y, -x.c.z}, x.r}; }},
        {"radius shift", false, [shift](const Site& x) { return Site{x.id, x.c, x.r + shift}; }},
    };
}

struct Result {
    std::string name;
    int instances = 0, checks = 0, failures = 0;
    std::vector<std::string> examples;
    std::map<std::string, int> outcomes;
};

inline std::string show(const std::vector<Site>& s) {
    std::string o;
    for (const auto& x : s)
        o += x.id + "={(" + format_scalar(x.c.x) + "," + format_scalar(x.c.y) + "," + format_scalar(x.c.z) + ")," +
             format_scalar(x.r) + "} ";
    return o;
}

inline Result run(const Predicate& p, int count, std::uint64_t seed) {
    Result res;
    res.name = p.name;
    std::mt19937_64 rng(seed);
    Bounds b;
    for (int tries = 0; res.instances < count && tries < count * 400; ++tries) {
        std::vector<Site> s;
        if (!random_sites(rng, p.sites, s, b) || !p.accept(s)) continue;
        ++res.instances;
        std::string want = p.eval(s, false);
        ++res.outcomes[want];
        for (const auto& t : transforms(rng, s)) {
            std::vector<Site> ts;
            for (const auto& x : s) ts.push_back(t.apply(x));
            ++res.checks;
            std::string got = p.eval(ts, t.odd);
            if (got != want) {
                ++res.failures;
                if (res.examples.size() < 3)
                    res.examples.push_back(t.name + ": " + want + " vs " + got + " on " + show(s));
            }
        }
    }
    return res;
}

// D minors of the inverted triple against E minors relative to the pole,
// over every choice of three columns.
struct BridgeResult {
    int triples = 0, checks = 0, failures = 0;
};

inline BridgeResult bridge(int count, std::uint64_t seed) {
    BridgeResult r;
    std::mt19937_64 rng(seed);
    const char* d_cols[] = {"uvw", "uvp", "uv1", "uwp", "uw1", "up1", "vwp", "vw1", "vp1", "wp1"};
    auto to_e = [](std::string c) {
        for (auto& ch : c) ch = ch == 'u' ? 'x' : ch == 'v' ? 'y' : ch == 'w' ? 'z' : ch == 'p' ? 'r' : 'p';
        return c;
    };
    while (r.triples < count) {
        std::vector<Site> s;
        if (!random_sites(rng, 4, s)) continue;
        const Site& pole = s[0];
        std::vector<Site> tri(s.begin() + 1, s.end());
        auto inverted = invert(tri, pole);
        Scalar denom = inverted[0].pbar * inverted[1].pbar * inverted[2].pbar;
        ++r.triples;
        for (const char* c : d_cols) {
            ++r.checks;
            if (minor_d(inverted, c) != minor_e(pole, tri, to_e(c)) / denom) ++r.failures;
        }
    }
    return r;
}

}  // namespace inv
