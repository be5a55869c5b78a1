#pragma once

// Exact-vs-oracle differential harness shared by the unit tests and the
// acceptance binary.

#include "apollo/apollo.hpp"
#include "apollo/oracle.hpp"
#include "apollo/sampling.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace diff {

using namespace apollo;

struct Stats {
    std::string name;
    int total = 0, agree = 0, disagree = 0, unknown = 0;
    double seconds = 0;
    std::vector<std::string> failures;  // first few disagreements
    std::map<std::string, int> outcomes;  // exact verdicts on agreeing instances
    int idem_checked = 0, idem_failed = 0;  // perturbed == base on non-degenerate instances
    long draws = 0;     // random draws spent finding instances that meet the preconditions
    int exhausted = 0;  // instances abandoned after the draw cap

    double unknown_rate() const { return total ? double(unknown) / total : 0; }
    bool pass(int min_total) const { return total >= min_total && disagree == 0 && unknown_rate() < 0.01; }
};

inline std::string show(const std::vector<Site>& s) {
    std::ostringstream o;
    for (const auto& x : s)
        o << x.id << "={(" << format_scalar(x.c.x) << "," << format_scalar(x.c.y) << "," << format_scalar(x.c.z)
          << ")," << format_scalar(x.r) << "} ";
    return o.str();
}

inline std::string show(ConeRelation v) { return to_string(v); }
inline std::string show(TrisectorKind v) { return to_string(v); }
inline std::string show(ExistenceCount v) { return to_string(v); }
inline std::string show(ShadowKind v) { return to_string(v); }
inline std::string show(Sign v) { return to_string(v); }
inline std::string show(ConflictOutcome v) { return to_string(v); }
inline std::string show(bool v) { return v ? "true" : "false"; }
inline std::string show(const SignPair& v) { return std::string("(") + to_string(v.first) + "," + to_string(v.second) + ")"; }
inline std::string show(const VertexOrdering& v) {
    std::string out = "[";
    for (std::size_t n = 0; n < v.size(); ++n) {
        if (n) out += ",";
        out += std::string(v[n].label == VertexLabelKind::Vijka ? "phi_" : "chi_") + v[n].site;
    }
    return out + "]";
}

// One predicate under test: draws an instance (returns false to redraw),
// evaluates the exact predicate and the oracle, both rendered as strings.
struct Case {
    std::string name;
    int sites;
    std::function<bool(const std::vector<Site>&)> accept;  // extra preconditions
    std::function<std::string(const std::vector<Site>&)> exact;
    std::function<std::optional<std::string>(const std::vector<Site>&)> oracle;
    // perturbed counterpart agrees with the base predicate; nullopt when the
    // instance is degenerate or the case has no perturbed form
    std::function<std::optional<bool>(const std::vector<Site>&)> idempotent = {};
};

template <class T>
std::optional<std::string> opt_show(const std::optional<T>& v) {
    if (!v) return std::nullopt;
    return show(*v);
}

inline std::vector<Case> cases(const oracle::Config& cfg = {}) {
    using V = const std::vector<Site>&;
    std::vector<Case> cs;
    auto any = [](V) { return true; };
    auto nonempty = [cfg](V s) {
        auto e = oracle::numeric_trisector_exists(s[0], s[1], s[2], cfg);
        return e && *e;
    };
    auto not_elliptic = [cfg, nonempty](V s) {
        if (!nonempty(s)) return false;
        auto t = oracle::numeric_tritype(s[0], s[1], s[2], cfg);
        return t && *t != TrisectorKind::Elliptic;
    };
    auto hyperbolic = [cfg](V s) {
        auto t = oracle::numeric_tritype(s[0], s[1], s[2], cfg);
        return t && *t == TrisectorKind::Hyperbolic;
    };
    cs.push_back({"incone", 3, any, [](V s) { return show(incone(s[0], s[1], s[2])); },
                  [cfg](V s) { return opt_show(oracle::numeric_incone(s[0], s[1], s[2], cfg)); },
                  [](V s) -> std::optional<bool> {
                      auto c = incone(s[0], s[1], s[2]);
                      if (c == ConeRelation::PTouch || c == ConeRelation::CTouch) return std::nullopt;
                      return incone_perturbed(s[0], s[1], s[2]) == c;
                  }});
    cs.push_back({"tritype", 3, any, [](V s) { return show(tritype(s[0], s[1], s[2])); },
                  [cfg](V s) { return opt_show(oracle::numeric_tritype(s[0], s[1], s[2], cfg)); }});
    cs.push_back({"distance", 4, not_elliptic, [](V s) { return show(distance(s[0], s[1], s[2], s[3])); },
                  [cfg](V s) { return opt_show(oracle::numeric_distance(s[0], s[1], s[2], s[3], cfg)); },
                  [](V s) -> std::optional<bool> {
                      auto d = distance(s[0], s[1], s[2], s[3]);
                      if (d.first == Sign::Zero || d.second == Sign::Zero) return std::nullopt;
                      return distance_perturbed(s[0], s[1], s[2], s[3]) == d;
                  }});
    cs.push_back({"existence", 4, nonempty, [](V s) { return show(existence(s[0], s[1], s[2], s[3])); },
                  [cfg](V s) { return opt_show(oracle::numeric_existence(s[0], s[1], s[2], s[3], cfg)); },
                  [](V s) -> std::optional<bool> {
                      if (shadow_region(s[0], s[1], s[2], s[3]).kind == ShadowKind::Degenerate) return std::nullopt;
                      auto e = existence(s[0], s[1], s[2], s[3]);
                      if (e == ExistenceCount::OneDouble || e == ExistenceCount::Infinite) return std::nullopt;
                      return existence_perturbed(s[0], s[1], s[2], s[3]) == e;
                  }});
    cs.push_back({"shadow_region", 4, nonempty,
                  [](V s) { return show(shadow_region(s[0], s[1], s[2], s[3]).kind); },
                  [cfg](V s) { return opt_show(oracle::numeric_shadow(s[0], s[1], s[2], s[3], cfg)); },
                  [](V s) -> std::optional<bool> {
                      auto f = shadow_region(s[0], s[1], s[2], s[3]).kind;
                      if (f == ShadowKind::Degenerate) return std::nullopt;
                      return shadow_region_perturbed(s[0], s[1], s[2], s[3]).kind == f;
                  }});
    // insphere needs v_ijka to exist
    cs.push_back({"insphere", 5,
                  [cfg](V s) {
                      auto v = oracle::numeric_apollonius_spheres(s[0], s[1], s[2], s[3], cfg);
                      if (!v) return false;
                      for (auto& x : *v)
                          if (x.label == VertexLabelKind::Vijka) return true;
                      return false;
                  },
                  [](V s) { return show(insphere(s[0], s[1], s[2], s[3], s[4])); },
                  [cfg](V s) { return opt_show(oracle::numeric_insphere(s[0], s[1], s[2], s[3], s[4], cfg)); }});
    // order needs a hyperbolic trisector and bounded-away shadows
    cs.push_back({"order", 5,
                  [cfg, hyperbolic](V s) {
                      if (!hyperbolic(s)) return false;
                      for (int n : {3, 4}) {
                          auto f = oracle::numeric_shadow(s[0], s[1], s[2], s[n], cfg);
                          if (!f || *f == ShadowKind::Empty || *f == ShadowKind::FullLine ||
                              *f == ShadowKind::Degenerate)
                              return false;
                      }
                      return true;
                  },
                  [](V s) { return show(order(s[0], s[1], s[2], s[3], s[4])); },
                  [cfg](V s) { return opt_show(oracle::numeric_order(s[0], s[1], s[2], s[3], s[4], cfg)); }});
    // both shadows with two endpoints: the only place the tie-break is needed
    cs.push_back({"order_two_endpoint", 5,
                  [cfg, hyperbolic](V s) {
                      if (!hyperbolic(s)) return false;
                      for (int n : {3, 4}) {
                          auto f = oracle::numeric_shadow(s[0], s[1], s[2], s[n], cfg);
                          if (!f || (*f != ShadowKind::Interval && *f != ShadowKind::Complement)) return false;
                      }
                      return true;
                  },
                  [](V s) { return show(order(s[0], s[1], s[2], s[3], s[4])); },
                  [cfg](V s) { return opt_show(oracle::numeric_order(s[0], s[1], s[2], s[3], s[4], cfg)); }});
    cs.push_back({"edge_conflict", 6,
                  [cfg](V s) {
                      auto v = oracle::numeric_valid_edge(s[0], s[1], s[2], s[3], s[4], cfg);
                      return v && *v;
                  },
                  [](V s) { return show(edge_conflict(s[0], s[1], s[2], s[3], s[4], s[5])); },
                  [cfg](V s) {
                      return opt_show(oracle::numeric_conflict(s[0], s[1], s[2], s[3], s[4], s[5], cfg));
                  }});
    // closed trisectors are rare among uniform draws; sample them on their own
    cs.push_back({"edge_conflict_elliptic", 6,
                  [cfg](V s) {
                      auto t = oracle::numeric_tritype(s[0], s[1], s[2], cfg);
                      if (!t || *t != TrisectorKind::Elliptic) return false;
                      auto v = oracle::numeric_valid_edge(s[0], s[1], s[2], s[3], s[4], cfg);
                      return v && *v;
                  },
                  [](V s) { return show(edge_conflict(s[0], s[1], s[2], s[3], s[4], s[5])); },
                  [cfg](V s) {
                      return opt_show(oracle::numeric_conflict(s[0], s[1], s[2], s[3], s[4], s[5], cfg));
                  }});
    // semi-infinite edges: the bounding vertex exists and the edge is empty of l
    cs.push_back({"infinite_right_edge_conflict", 5,
                  [cfg, hyperbolic](V s) {
                      if (!hyperbolic(s)) return false;
                      auto o = oracle::numeric_valid_infinite_edge(s[0], s[1], s[2], s[3], true, cfg);
                      return o && *o;
                  },
                  [](V s) { return show(infinite_right_edge_conflict(s[0], s[1], s[2], s[3], s[4])); },
                  [cfg](V s) {
                      return opt_show(oracle::numeric_right_conflict(s[0], s[1], s[2], s[3], s[4], cfg));
                  }});
    cs.push_back({"infinite_left_edge_conflict", 5,
                  [cfg, hyperbolic](V s) {
                      if (!hyperbolic(s)) return false;
                      auto o = oracle::numeric_valid_infinite_edge(s[0], s[1], s[2], s[3], false, cfg);
                      return o && *o;
                  },
                  [](V s) { return show(infinite_left_edge_conflict(s[0], s[1], s[2], s[3], s[4])); },
                  [cfg](V s) {
                      return opt_show(oracle::numeric_left_conflict(s[0], s[1], s[2], s[3], s[4], cfg));
                  }});
    return cs;
}

// Deterministic per-instance seeds; work is split across threads and folded
// back in instance order, so the summary never depends on scheduling.
inline Stats run(const Case& c, int count, std::uint64_t seed, const Bounds& bounds = {}, int threads = 0,
                 int max_draws = 2000) {
    Stats st;
    st.name = c.name;
    auto t0 = std::chrono::steady_clock::now();
    if (threads <= 0) threads = std::max(1u, std::thread::hardware_concurrency());
    struct Slot {
        bool found = false;
        int draws = 0;
        std::vector<Site> sites;
        std::string exact;
        std::optional<std::string> oracle;
        std::optional<bool> idem;
    };
    std::vector<Slot> slots(static_cast<std::size_t>(std::max(count, 0)));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int n; (n = next++) < count;) {
            Slot& sl = slots[n];
            std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(n));
            while (!sl.found && sl.draws < max_draws) {
                ++sl.draws;
                sl.found = random_sites(rng, c.sites, sl.sites, bounds) && c.accept(sl.sites);
            }
            if (!sl.found) continue;
            try {
                sl.exact = c.exact(sl.sites);
            } catch (const Error& e) {
                sl.exact = std::string("error: ") + e.what();
            }
            sl.oracle = c.oracle(sl.sites);
            if (c.idempotent) {
                try {
                    sl.idem = c.idempotent(sl.sites);
                } catch (const Error&) {
                    // base predicate refused the instance: nothing to compare
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    for (int n = 0; n < count; ++n) {
        const Slot& sl = slots[n];
        st.draws += sl.draws;
        if (!sl.found) {
            ++st.exhausted;
            continue;
        }
        ++st.total;
        if (sl.idem) {
            ++st.idem_checked;
            if (!*sl.idem) {
                ++st.idem_failed;
                if (st.failures.size() < 5)
                    st.failures.push_back("#" + std::to_string(n) + " perturbed differs " + show(sl.sites));
            }
        }
        if (!sl.oracle) {
            ++st.unknown;
        } else if (*sl.oracle == sl.exact) {
            ++st.agree;
            ++st.outcomes[sl.exact];
        } else {
            ++st.disagree;
            if (st.failures.size() < 5)
                st.failures.push_back("#" + std::to_string(n) + " exact=" + sl.exact + " oracle=" + *sl.oracle + " " +
                                      show(sl.sites));
        }
    }
    st.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return st;
}

}  // namespace diff
