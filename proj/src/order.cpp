#include "apollo/order.hpp"

#include "apollo/errors.hpp"
#include "apollo/inversion.hpp"
#include "kernel.hpp"

#include <algorithm>
#include <bit>

namespace apollo {

const char* to_string(ConflictOutcome c) {
    switch (c) {
        case ConflictOutcome::NoConflict: return "NoConflict";
        case ConflictOutcome::FullConflict: return "FullConflict";
        case ConflictOutcome::LeftVertexConflict: return "LeftVertexConflict";
        case ConflictOutcome::RightVertexConflict: return "RightVertexConflict";
        case ConflictOutcome::BothVerticesConflict: return "BothVerticesConflict";
        case ConflictOutcome::InteriorConflict: return "InteriorConflict";
    }
    return "?";
}

namespace {

using VL = VertexLabelKind;
constexpr VL Phi = VL::Vijka;  // right end of an in-part
constexpr VL Chi = VL::Vikja;  // left end of an in-part

struct Triple {
    const Site &i, &j, &k;
};

// InSphere at vertex (n, label) against q; Negative means the vertex lies in sh(q).
Sign at_vertex(const Triple& t, const Site& n, VL label, const Site& q) {
    Sign s = label == Phi ? insphere(t.i, t.j, t.k, n, q) : insphere(t.i, t.k, t.j, n, q);
    if (s == Sign::Zero)
        fail(ErrorKind::RequiresPerturbedInSphere,
             "InSphere of " + q.id + " against a vertex of (" + t.i.id + "," + t.j.id + "," + t.k.id + "," + n.id +
                 ") is zero");
    return s;
}

bool in_shadow(const Triple& t, const Site& n, VL label, const Site& q) {
    return at_vertex(t, n, label, q) == Sign::Negative;
}

// Vertices of a shadow form in trisector order.
std::vector<VL> endpoints(ShadowKind k) {
    switch (k) {
        case ShadowKind::LeftRay: return {Phi};
        case ShadowKind::RightRay: return {Chi};
        case ShadowKind::Interval: return {Chi, Phi};
        case ShadowKind::Complement: return {Phi, Chi};
        default: return {};
    }
}

// Is position p inside the shadow whose vertices sit at `pos` (in order)?
bool predicted_in(ShadowKind k, const std::vector<int>& pos, int p) {
    switch (k) {
        case ShadowKind::LeftRay: return p < pos[0];
        case ShadowKind::RightRay: return p > pos[0];
        case ShadowKind::Interval: return pos[0] < p && p < pos[1];
        case ShadowKind::Complement: return p < pos[0] || p > pos[1];
        default: return false;
    }
}

// Pole-centred images of the centers, pole = lightest of i, j, k.
struct PoleFrame {
    const Site* pole;
    Point3 ci, cj;  // inverted centers of the two non-pole sites, in cyclic order
    Point3 image(const Site& s) const { return invert(s, *pole).center(); }
};

PoleFrame pole_frame(const Triple& t) {
    const Site& p = detail::lightest({&t.i, &t.j, &t.k});
    // cyclic rotation keeps the trisector orientation
    const Site *a = &t.i, *b = &t.j;
    if (&p == &t.i) a = &t.j, b = &t.k;
    else if (&p == &t.j) a = &t.k, b = &t.i;
    return {&p, invert(*a, p).center(), invert(*b, p).center()};
}

// Equivalent-sphere sign flip: complement forms centre their gap on the
// opposite ray of the projected image.
int flip_of(ShadowKind k) { return k == ShadowKind::Complement ? -1 : 1; }

// Whether the key point of a (midpoint of its in-part or gap) precedes that
// of b along the trisector.
bool key_precedes(const Triple& t, const Site& a, int fa, const Site& b, int fb) {
    PoleFrame f = pole_frame(t);
    Point3 origin{};
    Point3 ca = f.image(a), cb = f.image(b);
    Sign o1 = Sign(to_int(orient(ca, f.ci, f.cj, origin)) * fa);
    Sign o2 = Sign(to_int(orient(cb, f.ci, f.cj, origin)) * fb);
    if (o1 * o2 == Sign::Positive) {
        Sign o3 = Sign(to_int(orient(cb, f.ci, f.cj, ca)) * fa * fb);
        if (o3 == Sign::Zero) fail(ErrorKind::OrderUndefined, "coincident shadow midpoints");
        return o3 == Sign::Negative;
    }
    if (o1 == o2) fail(ErrorKind::OrderUndefined, "coincident shadow midpoints");
    return o1 < o2;
}

ShadowKind proper_form(const Site& i, const Site& j, const Site& k, const Site& n) {
    ShadowKind f = shadow_region(i, j, k, n).kind;
    if (f == ShadowKind::Empty || f == ShadowKind::FullLine)
        fail(ErrorKind::OrderUndefined, "shadow of " + n.id + " is " + to_string(f));
    if (f == ShadowKind::Degenerate)
        fail(ErrorKind::RequiresPerturbedInSphere, "degenerate shadow of " + n.id);
    return f;
}

// Positions of the vertices of the two sites in a merged ordering.
struct Merge {
    std::vector<int> pa, pb;
};

}  // namespace

VertexOrdering order(const Site& i, const Site& j, const Site& k, const Site& a, const Site& b) {
    Triple t{i, j, k};
    ShadowKind fa = proper_form(i, j, k, a), fb = proper_form(i, j, k, b);
    auto ea = endpoints(fa), eb = endpoints(fb);
    // observed memberships of each vertex in the other shadow
    std::vector<bool> a_in_b, b_in_a;
    for (VL l : ea) a_in_b.push_back(in_shadow(t, a, l, b));
    for (VL l : eb) b_in_a.push_back(in_shadow(t, b, l, a));

    const int na = static_cast<int>(ea.size()), nb = static_cast<int>(eb.size()), n = na + nb;
    std::vector<Merge> fits;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != na) continue;
        Merge m;
        for (int p = 0; p < n; ++p) (mask >> p & 1 ? m.pa : m.pb).push_back(p);
        bool ok = true;
        for (int x = 0; x < na && ok; ++x) ok = predicted_in(fb, m.pb, m.pa[x]) == a_in_b[x];
        for (int x = 0; x < nb && ok; ++x) ok = predicted_in(fa, m.pa, m.pb[x]) == b_in_a[x];
        if (ok) fits.push_back(m);
    }
    if (fits.empty() || fits.size() > 2) fail(ErrorKind::OrderUndefined, "inconsistent InSphere signature");
    const Merge* pick = &fits[0];
    if (fits.size() == 2) {
        // the two candidates are the two block orders; decide by key points
        bool a_first = key_precedes(t, a, flip_of(fa), b, flip_of(fb));
        pick = nullptr;
        for (const auto& m : fits)
            if ((m.pa.back() < m.pb.front()) == a_first && (m.pb.back() < m.pa.front()) == !a_first) pick = &m;
        if (!pick) fail(ErrorKind::OrderUndefined, "ambiguous ordering is not a block order");
    }
    VertexOrdering out(n);
    for (int x = 0; x < na; ++x) out[pick->pa[x]] = {a.id, ea[x]};
    for (int x = 0; x < nb; ++x) out[pick->pb[x]] = {b.id, eb[x]};
    return out;
}

namespace {

int position(const VertexOrdering& o, const Site& s, VL label) {
    for (std::size_t n = 0; n < o.size(); ++n)
        if (o[n].site == s.id && o[n].label == label) return static_cast<int>(n);
    fail(ErrorKind::OrderUndefined, "vertex missing from ordering");
}

bool precedes(const Triple& t, const Site& x, VL lx, const Site& y, VL ly) {
    VertexOrdering o = order(t.i, t.j, t.k, x, y);
    return position(o, x, lx) < position(o, y, ly);
}

ShadowKind conflict_form(const Site& i, const Site& j, const Site& k, const Site& q) {
    ShadowKind f = shadow_region(i, j, k, q).kind;
    if (f == ShadowKind::Degenerate) fail(ErrorKind::RequiresPerturbedInSphere, "degenerate shadow of " + q.id);
    return f;
}

void require_vertex(const Site& i, const Site& j, const Site& k, const Site& n, VL label) {
    // NoSuchVertex surfaces as InvalidEdge for edge queries
    try {
        (void)vertex_coordinates(i, j, k, n, label);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NoSuchVertex || e.kind() == ErrorKind::ContainmentViolation)
            fail(ErrorKind::InvalidEdge, std::string("edge endpoint missing: ") + e.what());
        throw;
    }
}

using CO = ConflictOutcome;

CO hyperbolic_edge(const Triple& t, const Site& l, const Site& m, const Site& q) {
    ShadowKind f = conflict_form(t.i, t.j, t.k, q);
    if (f == ShadowKind::Empty) return CO::NoConflict;
    if (f == ShadowKind::FullLine) return CO::FullConflict;
    bool i1 = in_shadow(t, l, Phi, q), i2 = in_shadow(t, m, Chi, q);
    switch (f) {
        case ShadowKind::LeftRay:
            if (!i1) return CO::NoConflict;
            return i2 ? CO::FullConflict : CO::LeftVertexConflict;
        case ShadowKind::RightRay:
            if (i1) return CO::FullConflict;
            return i2 ? CO::RightVertexConflict : CO::NoConflict;
        case ShadowKind::Interval:
            if (i1 && !i2) return CO::LeftVertexConflict;
            if (!i1 && i2) return CO::RightVertexConflict;
            if (i1 && i2) return CO::FullConflict;
            if (precedes(t, q, Phi, l, Phi)) return CO::NoConflict;
            return precedes(t, q, Phi, m, Chi) ? CO::InteriorConflict : CO::NoConflict;
        case ShadowKind::Complement:
            if (i1 && !i2) return CO::LeftVertexConflict;
            if (!i1 && i2) return CO::RightVertexConflict;
            if (!i1 && !i2) return CO::NoConflict;
            if (precedes(t, q, Chi, l, Phi)) return CO::FullConflict;
            return precedes(t, q, Chi, m, Chi) ? CO::BothVerticesConflict : CO::FullConflict;
        default: break;
    }
    fail(ErrorKind::ContractViolation, "unreachable shadow form");
}

// Cyclic order of the key points of l, m, q on a closed trisector:
// true when l, m, q appear in this order.
bool cyclic_lmq(const Triple& t, const Site& l, const Site& m, const Site& q) {
    PoleFrame f = pole_frame(t);
    Point3 cl = f.image(l), cm = f.image(m), cq = f.image(q);
    Sign o1 = orient(cq, f.ci, f.cj, cl), o2 = orient(cm, f.ci, f.cj, cl);
    if (o1 * o2 == Sign::Positive) {
        Sign o3 = orient(cq, f.ci, f.cj, cm);
        if (o3 == Sign::Zero) fail(ErrorKind::RequiresPerturbedInSphere, "coincident shadow midpoints");
        return o3 == Sign::Negative;
    }
    if (o1 == o2) fail(ErrorKind::RequiresPerturbedInSphere, "coincident shadow midpoints");
    return o2 < o1;
}

CO closed_edge(const Triple& t, const Site& l, const Site& m, const Site& q) {
    ShadowKind f = conflict_form(t.i, t.j, t.k, q);
    bool i1 = in_shadow(t, l, Phi, q);
    if (f == ShadowKind::Empty || f == ShadowKind::FullLine) return i1 ? CO::FullConflict : CO::NoConflict;
    if (f != ShadowKind::Interval) fail(ErrorKind::RequiresPerturbedInSphere, "degenerate shadow of " + q.id);
    bool i2 = in_shadow(t, m, Chi, q);
    if (i1 && !i2) return CO::LeftVertexConflict;
    if (!i1 && i2) return CO::RightVertexConflict;
    bool i3 = in_shadow(t, m, Phi, l);
    bool q_clear = !in_shadow(t, q, Chi, l) && !in_shadow(t, q, Chi, m) && !in_shadow(t, q, Phi, l) &&
                   !in_shadow(t, q, Phi, m);
    // q's in-arc lies on the edge or entirely off it; with disjoint sh(l)
    // and sh(m) there are two candidate gaps, told apart by the cyclic order
    // of the shadow midpoints
    bool on_edge = false;
    if (q_clear) {
        if (i3)
            on_edge = true;
        else
            on_edge = cyclic_lmq(t, l, m, q) == i1;
    }
    if (i1) return on_edge ? CO::BothVerticesConflict : CO::FullConflict;
    return on_edge ? CO::InteriorConflict : CO::NoConflict;
}

}  // namespace

ConflictOutcome edge_conflict(const Site& i, const Site& j, const Site& k, const Site& l, const Site& m,
                              const Site& q) {
    require_vertex(i, j, k, l, Phi);
    require_vertex(i, j, k, m, Chi);
    Triple t{i, j, k};
    if (tritype(i, j, k) == TrisectorKind::Hyperbolic) return hyperbolic_edge(t, l, m, q);
    return closed_edge(t, l, m, q);
}

ConflictOutcome infinite_right_edge_conflict(const Site& i, const Site& j, const Site& k, const Site& l,
                                             const Site& q) {
    if (tritype(i, j, k) != TrisectorKind::Hyperbolic)
        fail(ErrorKind::InvalidEdge, "semi-infinite edges need a hyperbolic trisector");
    require_vertex(i, j, k, l, Phi);
    Triple t{i, j, k};
    ShadowKind f = conflict_form(i, j, k, q);
    if (f == ShadowKind::Empty) return CO::NoConflict;
    if (f == ShadowKind::FullLine) return CO::FullConflict;
    bool in = in_shadow(t, l, Phi, q);
    switch (f) {
        case ShadowKind::LeftRay: return in ? CO::LeftVertexConflict : CO::NoConflict;
        case ShadowKind::RightRay: return in ? CO::FullConflict : CO::RightVertexConflict;
        case ShadowKind::Interval:
            if (in) return CO::LeftVertexConflict;
            return precedes(t, l, Phi, q, Chi) ? CO::InteriorConflict : CO::NoConflict;
        case ShadowKind::Complement:
            if (!in) return CO::RightVertexConflict;
            return precedes(t, l, Phi, q, Phi) ? CO::BothVerticesConflict : CO::FullConflict;
        default: break;
    }
    fail(ErrorKind::ContractViolation, "unreachable shadow form");
}

ConflictOutcome infinite_left_edge_conflict(const Site& i, const Site& j, const Site& k, const Site& m,
                                            const Site& q) {
    if (tritype(i, j, k) != TrisectorKind::Hyperbolic)
        fail(ErrorKind::InvalidEdge, "semi-infinite edges need a hyperbolic trisector");
    require_vertex(i, j, k, m, Chi);
    Triple t{i, j, k};
    ShadowKind f = conflict_form(i, j, k, q);
    if (f == ShadowKind::Empty) return CO::NoConflict;
    if (f == ShadowKind::FullLine) return CO::FullConflict;
    bool in = in_shadow(t, m, Chi, q);
    switch (f) {
        case ShadowKind::LeftRay: return in ? CO::FullConflict : CO::LeftVertexConflict;
        case ShadowKind::RightRay: return in ? CO::RightVertexConflict : CO::NoConflict;
        case ShadowKind::Interval:
            if (in) return CO::RightVertexConflict;
            return precedes(t, m, Chi, q, Chi) ? CO::NoConflict : CO::InteriorConflict;
        case ShadowKind::Complement:
            if (!in) return CO::LeftVertexConflict;
            return precedes(t, m, Chi, q, Phi) ? CO::FullConflict : CO::BothVerticesConflict;
        default: break;
    }
    fail(ErrorKind::ContractViolation, "unreachable shadow form");
}

bool validate_edge(const Site& i, const Site& j, const Site& k, const Site& l, const Site& m) {
    auto has = [&](const Site& n, VL label) {
        ShadowKind f = shadow_region(i, j, k, n).kind;
        if (f == ShadowKind::Degenerate) fail(ErrorKind::RequiresPerturbedInSphere, "degenerate shadow of " + n.id);
        auto e = endpoints(f);
        return std::find(e.begin(), e.end(), label) != e.end();
    };
    if (!has(l, Phi) || !has(m, Chi)) return false;
    Triple t{i, j, k};
    if (tritype(i, j, k) != TrisectorKind::Hyperbolic)
        return !in_shadow(t, m, Chi, l) && !in_shadow(t, l, Phi, m);
    // adjacent in the merged order, l's vertex first
    VertexOrdering o = order(i, j, k, l, m);
    int pl = position(o, l, Phi), pm = position(o, m, Chi);
    return pm == pl + 1;
}

}  // namespace apollo
