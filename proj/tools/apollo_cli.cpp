// apollo: evaluate predicates on a site file, compare against the oracle,
// and fuzz exact-vs-oracle agreement.
//
// Exit codes: 0 ok, 2 precondition error, 3 needs the perturbed InSphere,
// 4 disagreement, 5 parse error.

#include "CLI11.hpp"
#include "differential.hpp"
#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace apollo;
using json = nlohmann::ordered_json;

namespace {

enum Exit { Ok = 0, Precondition = 2, NeedsPerturbed = 3, Disagreement = 4, Parse = 5 };

int exit_for(ErrorKind k) {
    switch (k) {
    case ErrorKind::ParseError: return Parse;
    case ErrorKind::RequiresPerturbedInSphere: return NeedsPerturbed;
    default: return Precondition;
    }
}

struct ParseFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string value_text(const json& v, const std::string& what) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return v.dump();
    throw ParseFailure(what + ": expected a string holding a decimal or p/q");
}

std::map<std::string, Site> load_sites(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseFailure("cannot open " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseFailure(path + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("sites") || !doc["sites"].is_array())
        throw ParseFailure(path + ": expected an object with a \"sites\" array");
    std::map<std::string, Site> out;
    for (const auto& s : doc["sites"]) {
        if (!s.is_object() || !s.contains("id") || !s["id"].is_string() || !s.contains("center") ||
            !s["center"].is_array() || s["center"].size() != 3 || !s.contains("radius"))
            throw ParseFailure(path + ": each site needs id, center[3] and radius");
        std::string id = s["id"];
        if (out.count(id)) throw ParseFailure(path + ": duplicate id '" + id + "'");
        try {
            out.emplace(id, make_site(id, value_text(s["center"][0], id + ".x"), value_text(s["center"][1], id + ".y"),
                                      value_text(s["center"][2], id + ".z"), value_text(s["radius"], id + ".radius")));
        } catch (const Error& e) {
            throw ParseFailure(path + ": " + e.what());
        }
    }
    return out;
}

std::vector<std::string> split_ids(const std::string& text) {
    std::vector<std::string> ids;
    std::stringstream ss(text);
    for (std::string id; std::getline(ss, id, ',');)
        if (!id.empty()) ids.push_back(id);
    return ids;
}

std::string normalize(std::string name) {
    for (auto& c : name)
        if (c == '-') c = '_';
    return name;
}

std::string show_quad(const QuadExt& q) {
    if (q.is_rational()) return format_scalar(q.p());
    return format_scalar(q.p()) + "+" + format_scalar(q.q()) + "*sqrt(" + format_scalar(q.delta()) + ")";
}

using V = const std::vector<Site>&;

struct Predicate {
    int arity;
    std::function<std::string(V)> exact;
    std::function<std::optional<std::string>(V, const oracle::Config&)> oracle;  // empty: no oracle
    bool trisector;  // the first three sites span a trisector worth tracing
};

std::string vertex_text(V s, VertexLabelKind label) {
    auto v = vertex_coordinates(s[0], s[1], s[2], s[3], label);
    return "(" + show_quad(v.coordinate(0)) + ", " + show_quad(v.coordinate(1)) + ", " + show_quad(v.coordinate(2)) + ")";
}

const std::map<std::string, Predicate>& predicates() {
    using diff::opt_show;
    using diff::show;
    using C = const oracle::Config&;
    static const std::map<std::string, Predicate> table = {
        {"incone", {3, [](V s) { return show(incone(s[0], s[1], s[2])); },
                    [](V s, C c) { return opt_show(oracle::numeric_incone(s[0], s[1], s[2], c)); }, false}},
        {"incone_perturbed", {3, [](V s) { return show(incone_perturbed(s[0], s[1], s[2])); }, {}, false}},
        {"tritype", {3, [](V s) { return show(tritype(s[0], s[1], s[2])); },
                     [](V s, C c) { return opt_show(oracle::numeric_tritype(s[0], s[1], s[2], c)); }, false}},
        {"distance", {4, [](V s) { return show(distance(s[0], s[1], s[2], s[3])); },
                      [](V s, C c) { return opt_show(oracle::numeric_distance(s[0], s[1], s[2], s[3], c)); }, true}},
        {"distance_perturbed", {4, [](V s) { return show(distance_perturbed(s[0], s[1], s[2], s[3])); }, {}, true}},
        {"existence", {4, [](V s) { return show(existence(s[0], s[1], s[2], s[3])); },
                       [](V s, C c) { return opt_show(oracle::numeric_existence(s[0], s[1], s[2], s[3], c)); }, true}},
        {"existence_perturbed", {4, [](V s) { return show(existence_perturbed(s[0], s[1], s[2], s[3])); }, {}, true}},
        {"shadow_region", {4, [](V s) { return show(shadow_region(s[0], s[1], s[2], s[3]).kind); },
                           [](V s, C c) { return opt_show(oracle::numeric_shadow(s[0], s[1], s[2], s[3], c)); }, true}},
        {"shadow_region_perturbed",
         {4, [](V s) { return show(shadow_region_perturbed(s[0], s[1], s[2], s[3]).kind); }, {}, true}},
        {"degeneracy_type", {4, [](V s) { return std::string(to_string(degeneracy_type(s[0], s[1], s[2], s[3]))); }, {}, true}},
        {"vertex_ijka", {4, [](V s) { return vertex_text(s, VertexLabelKind::Vijka); }, {}, true}},
        {"vertex_ikja", {4, [](V s) { return vertex_text(s, VertexLabelKind::Vikja); }, {}, true}},
        {"insphere", {5, [](V s) { return show(insphere(s[0], s[1], s[2], s[3], s[4])); },
                      [](V s, C c) { return opt_show(oracle::numeric_insphere(s[0], s[1], s[2], s[3], s[4], c)); }, true}},
        {"order", {5, [](V s) { return show(order(s[0], s[1], s[2], s[3], s[4])); },
                   [](V s, C c) { return opt_show(oracle::numeric_order(s[0], s[1], s[2], s[3], s[4], c)); }, true}},
        {"validate_edge", {5, [](V s) { return show(validate_edge(s[0], s[1], s[2], s[3], s[4])); },
                           [](V s, C c) { return opt_show(oracle::numeric_valid_edge(s[0], s[1], s[2], s[3], s[4], c)); }, true}},
        {"edge_conflict",
         {6, [](V s) { return show(edge_conflict(s[0], s[1], s[2], s[3], s[4], s[5])); },
          [](V s, C c) { return opt_show(oracle::numeric_conflict(s[0], s[1], s[2], s[3], s[4], s[5], c)); }, true}},
        {"infinite_right_edge_conflict",
         {5, [](V s) { return show(infinite_right_edge_conflict(s[0], s[1], s[2], s[3], s[4])); },
          [](V s, C c) { return opt_show(oracle::numeric_right_conflict(s[0], s[1], s[2], s[3], s[4], c)); }, true}},
        {"infinite_left_edge_conflict",
         {5, [](V s) { return show(infinite_left_edge_conflict(s[0], s[1], s[2], s[3], s[4])); },
          [](V s, C c) { return opt_show(oracle::numeric_left_conflict(s[0], s[1], s[2], s[3], s[4], c)); }, true}},
    };
    return table;
}

std::string guarded(const std::function<std::string()>& f) {
    try {
        return f();
    } catch (const Error& e) {
        return std::string("error ") + to_string(e.kind());
    }
}

// Sub-predicates worth seeing next to the result: the trisector type, every
// further site's shadow and, for order, the four InSphere signs.
std::vector<std::pair<std::string, std::string>> trace(const std::string& name, V s) {
    std::vector<std::pair<std::string, std::string>> t;
    if (!predicates().at(name).trisector) return t;
    const std::string ijk = s[0].id + "," + s[1].id + "," + s[2].id;
    t.emplace_back("tritype(" + ijk + ")", guarded([&] { return diff::show(tritype(s[0], s[1], s[2])); }));
    for (std::size_t n = 3; n < s.size(); ++n)
        t.emplace_back("shadow_region(" + ijk + "," + s[n].id + ")",
                       guarded([&] { return diff::show(shadow_region(s[0], s[1], s[2], s[n]).kind); }));
    if (name == "order") {
        for (auto [a, b] : {std::pair{3, 4}, std::pair{4, 3}})
            for (bool swap : {false, true}) {
                const Site &j = swap ? s[2] : s[1], &k = swap ? s[1] : s[2];
                t.emplace_back("insphere(" + s[0].id + "," + j.id + "," + k.id + "," + s[a].id + "," + s[b].id + ")",
                               guarded([&] { return diff::show(insphere(s[0], j, k, s[a], s[b])); }));
            }
    }
    return t;
}

struct Common {
    bool json_out = false;
    unsigned precision = 256;
};

void emit(const json& j, bool as_json) {
    if (as_json) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    for (const auto& [k, v] : j.items()) {
        if (v.is_object()) {
            std::cout << k << ":" << (v.empty() ? " {}" : "") << "\n";
            for (const auto& [k2, v2] : v.items())
                std::cout << "  " << k2 << ": " << (v2.is_string() ? v2.get<std::string>() : v2.dump()) << "\n";
        } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) {
                       return x.is_string() && x.get<std::string>().find(' ') == std::string::npos;
                   })) {
            std::string line;
            for (const auto& x : v) line += (line.empty() ? "" : ",") + x.get<std::string>();
            std::cout << k << ": " << (v.empty() ? "[]" : line) << "\n";
        } else if (v.is_array()) {
            std::cout << k << ":";
            if (v.empty()) std::cout << " []";
            std::cout << "\n";
            for (const auto& x : v) std::cout << "  " << (x.is_string() ? x.get<std::string>() : x.dump()) << "\n";
        } else {
            std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
    }
}

int run_eval(const std::string& pred_name, const std::string& sites_path, const std::string& ids_text, bool with_oracle,
             bool compare, const Common& common) {
    const std::string name = normalize(pred_name);
    json rep;
    rep["command"] = compare ? "compare" : "eval";
    rep["predicate"] = name;
    auto fail = [&](int code, const std::string& kind, const std::string& msg) {
        rep["error"] = json{{"kind", kind}, {"message", msg}};
        rep["exit"] = code;
        emit(rep, common.json_out);
        return code;
    };
    auto it = predicates().find(name);
    if (it == predicates().end()) return fail(Precondition, "UnknownPredicate", "no predicate named '" + pred_name + "'");
    const Predicate& p = it->second;

    std::map<std::string, Site> file;
    try {
        file = load_sites(sites_path);
    } catch (const ParseFailure& e) {
        return fail(Parse, "ParseError", e.what());
    }
    auto ids = split_ids(ids_text);
    rep["ids"] = ids;
    if (static_cast<int>(ids.size()) != p.arity)
        return fail(Precondition, "ArityMismatch",
                    name + " takes " + std::to_string(p.arity) + " sites, got " + std::to_string(ids.size()));
    std::vector<Site> s;
    for (const auto& id : ids) {
        auto f = file.find(id);
        if (f == file.end()) return fail(Precondition, "UnknownId", "no site '" + id + "' in " + sites_path);
        s.push_back(f->second);
    }

    int code = Ok;
    std::optional<std::string> result;
    try {
        result = p.exact(s);
        rep["result"] = *result;
    } catch (const Error& e) {
        code = exit_for(e.kind());
        rep["error"] = json{{"kind", to_string(e.kind())}, {"message", e.what()}};
    }
    json tr = json::object();
    for (const auto& [k, v] : trace(name, s)) tr[k] = v;
    rep["trace"] = tr;

    if (with_oracle || compare) {
        if (!p.oracle) {
            rep["oracle"] = "unavailable";
        } else {
            oracle::Config cfg;
            cfg.precision_bits = common.precision;
            auto o = p.oracle(s, cfg);
            rep["oracle"] = o ? *o : std::string("Unknown");
            if (!o)
                rep["agreement"] = "unknown";
            else if (!result)
                rep["agreement"] = "exact-error";
            else if (result && *o == *result)
                rep["agreement"] = "agree";
            else {
                rep["agreement"] = "disagree";
                code = Disagreement;
            }
        }
    }
    rep["exit"] = code;
    emit(rep, common.json_out);
    return code;
}

bool parse_bounds(const std::string& text, Bounds& b) {
    std::vector<int> v;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ',');) {
        try {
            std::size_t used = 0;
            v.push_back(std::stoi(part, &used));
            if (used != part.size()) return false;
        } catch (const std::exception&) {
            return false;
        }
    }
    if (v.size() == 1 && v[0] > 0) {
        b.lo = -v[0];
        b.hi = v[0];
        return true;
    }
    if (v.size() < 3 || v.size() > 4 || v[0] >= v[1] || v[2] <= 0) return false;
    b.lo = v[0];
    b.hi = v[1];
    b.rmax = v[2];
    if (v.size() == 4) {
        if (v[3] <= 0) return false;
        b.max_den = v[3];
    }
    return true;
}

int run_fuzz(const std::string& pred_name, int count, std::uint64_t seed, const std::string& bounds_text, int max_draws,
             const Common& common) {
    const std::string name = normalize(pred_name);
    json rep;
    rep["command"] = "fuzz";
    rep["predicate"] = name;
    auto fail = [&](int code, const std::string& kind, const std::string& msg) {
        rep["error"] = json{{"kind", kind}, {"message", msg}};
        rep["exit"] = code;
        emit(rep, common.json_out);
        return code;
    };
    Bounds b;
    if (!bounds_text.empty() && !parse_bounds(bounds_text, b))
        return fail(Parse, "ParseError", "bounds must be B or lo,hi,rmax[,max_den]: '" + bounds_text + "'");
    if (count < 1) return fail(Precondition, "BadCount", "count must be at least 1");
    oracle::Config cfg;
    cfg.precision_bits = common.precision;
    std::optional<diff::Case> chosen;
    std::vector<std::string> names;
    for (auto& c : diff::cases(cfg)) {
        names.push_back(c.name);
        if (c.name == name) chosen = c;
    }
    if (!chosen) {
        std::string all;
        for (const auto& n : names) all += (all.empty() ? "" : ", ") + n;
        return fail(Precondition, "UnknownPredicate", "fuzzable predicates: " + all);
    }
    auto st = diff::run(*chosen, count, seed, b, 0, max_draws);
    rep["seed"] = seed;
    rep["bounds"] = json{{"lo", b.lo}, {"hi", b.hi}, {"rmax", b.rmax}, {"max_den", b.max_den}};
    rep["requested"] = count;
    rep["generated"] = st.total;
    rep["draws"] = st.draws;
    rep["exhausted"] = st.exhausted;
    rep["agree"] = st.agree;
    rep["disagree"] = st.disagree;
    rep["unknown"] = st.unknown;
    if (chosen->idempotent) {
        rep["idempotence_checked"] = st.idem_checked;
        rep["idempotence_failed"] = st.idem_failed;
    }
    json outs = json::object();
    for (const auto& [k, v] : st.outcomes) outs[k] = v;
    rep["outcomes"] = outs;
    rep["failures"] = st.failures;
    int code = st.disagree || st.idem_failed ? Disagreement : Ok;
    rep["exit"] = code;
    emit(rep, common.json_out);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact predicates for the Apollonius diagram of spheres"};
    app.require_subcommand(1);
    Common common;
    std::string pred, sites, ids, bounds;
    bool with_oracle = false;
    int count = 100, max_draws = 2000;
    std::uint64_t seed = 1;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", common.json_out, "emit JSON instead of text");
        sub->add_option("--precision", common.precision, "oracle precision in bits")->check(CLI::Range(64u, 4096u));
    };
    auto* eval = app.add_subcommand("eval", "evaluate one predicate exactly");
    auto* compare = app.add_subcommand("compare", "evaluate exactly and with the oracle; nonzero exit on disagreement");
    for (auto* sub : {eval, compare}) {
        sub->add_option("predicate", pred, "predicate name")->required();
        sub->add_option("--sites", sites, "site file (JSON)")->required();
        sub->add_option("--ids", ids, "comma-separated site ids, in argument order")->required();
        add_common(sub);
    }
    eval->add_flag("--oracle", with_oracle, "also run the numerical oracle");
    auto* fuzz = app.add_subcommand("fuzz", "exact-vs-oracle agreement on seeded random instances");
    fuzz->add_option("predicate", pred, "predicate name")->required();
    fuzz->add_option("--count", count, "number of instances");
    fuzz->add_option("--seed", seed, "seed of the instance stream");
    fuzz->add_option("--bounds", bounds, "B for coordinates in [-B,B], or lo,hi,rmax[,max_den]");
    fuzz->add_option("--max-draws", max_draws, "draws per instance before giving up")->check(CLI::PositiveNumber);
    add_common(fuzz);
    auto* list = app.add_subcommand("list", "list predicate names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return Parse;
    }

    if (list->parsed()) {
        for (const auto& [name, p] : predicates()) std::cout << name << " " << p.arity << "\n";
        return Ok;
    }
    if (fuzz->parsed()) return run_fuzz(pred, count, seed, bounds, max_draws, common);
    return run_eval(pred, sites, ids, with_oracle, compare->parsed(), common);
}
