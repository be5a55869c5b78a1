#include "apollo/oracle.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cmath>

namespace apollo::oracle {

namespace {

namespace bmp = boost::multiprecision;
using Real = bmp::mpfr_float;
using Vec = std::array<Real, 3>;

class PrecisionScope {
public:
    explicit PrecisionScope(unsigned bits) : old_(Real::default_precision()) {
        Real::default_precision(static_cast<unsigned>(bits * 0.30103) + 1);
    }
    ~PrecisionScope() { Real::default_precision(old_); }

private:
    unsigned old_;
};

Real pi_() { return 4 * atan(Real(1)); }

Real R_(const Scalar& q) {
    Real r;
    mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}
Vec V_(const Point3& p) { return {R_(p.x), R_(p.y), R_(p.z)}; }
Vec add(const Vec& a, const Vec& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec sub(const Vec& a, const Vec& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec mul(const Vec& a, const Real& s) { return {a[0] * s, a[1] * s, a[2] * s}; }
Real dot(const Vec& a, const Vec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec cross(const Vec& a, const Vec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
Real norm(const Vec& a) { return sqrt(dot(a, a)); }

struct Ball {
    Vec c;
    Real r;
    std::string id;
};
Ball B_(const Site& s) { return {V_(s.c), R_(s.r), s.id}; }

enum class Kind { Hyperbolic, Elliptic, Parabolic };

struct Vtx {
    Real R, s, tau;
    VertexLabelKind label;
};

// Trisector of i, j, k as X(R, s) = C_i + A + R B + s W with s^2 = g(R).
struct Tri {
    Ball b[3];
    Vec A, B, W;
    Real c2, c1, c0, rmin, eps;
    Kind kind;
    Real Rm, Rh, sh;  // elliptic
    int sigma = 1;

    Real Rplus(const Real& s) const {
        Real disc = c1 * c1 - 4 * c2 * (c0 - s * s);
        if (disc < 0) disc = 0;
        return (-c1 + sqrt(disc)) / (2 * c2);
    }
    Vec point(const Real& R, const Real& s) const { return add(add(add(b[0].c, A), mul(B, R)), mul(W, s)); }
    Real tau_of(const Real& R, const Real& s) const {
        if (kind == Kind::Hyperbolic) return sigma * s;
        Real th = atan2(s / sh, (R - Rm) / Rh);
        Real t = sigma * th;
        Real two_pi = 2 * pi_();
        while (t < 0) t += two_pi;
        while (t >= two_pi) t -= two_pi;
        return t;
    }
    void at(const Real& tau, Real& R, Real& s) const {
        if (kind == Kind::Hyperbolic) {
            s = sigma * tau;
            R = Rplus(s);
        } else {
            Real th = sigma * tau;
            R = Rm + Rh * cos(th);
            s = sh * sin(th);
        }
    }
    // |X - C| - (R + r): negative inside the shadow
    Real member(const Ball& q, const Real& tau) const {
        Real R, s;
        at(tau, R, s);
        return norm(sub(point(R, s), q.c)) - (R + q.r);
    }
};

Real eps_of(const Config& cfg) { return ldexp(Real(1), cfg.margin_log2); }

std::optional<Tri> make_tri(const Site& i, const Site& j, const Site& k, const Config& cfg,
                            bool allow_parabolic = false, bool need_points = true) {
    Tri t;
    t.b[0] = B_(i);
    t.b[1] = B_(j);
    t.b[2] = B_(k);
    t.eps = eps_of(cfg);
    Vec Dj = sub(t.b[1].c, t.b[0].c), Dk = sub(t.b[2].c, t.b[0].c);
    Vec n = cross(Dj, Dk);
    Real nn = norm(n);
    if (nn < t.eps) return std::nullopt;  // collinear centers
    t.W = mul(n, 1 / nn);
    const Real &ri = t.b[0].r, &rj = t.b[1].r, &rk = t.b[2].r;
    Real bj = (dot(Dj, Dj) - rj * rj + ri * ri) / 2, bk = (dot(Dk, Dk) - rk * rk + ri * ri) / 2;
    Real gj = -(rj - ri), gk = -(rk - ri);
    Real g11 = dot(Dj, Dj), g12 = dot(Dj, Dk), g22 = dot(Dk, Dk);
    Real gd = g11 * g22 - g12 * g12;
    auto solve = [&](const Real& y1, const Real& y2) {
        Real a1 = (y1 * g22 - y2 * g12) / gd, a2 = (g11 * y2 - g12 * y1) / gd;
        return add(mul(Dj, a1), mul(Dk, a2));
    };
    t.A = solve(bj, bk);
    t.B = solve(gj, gk);
    t.c2 = 1 - dot(t.B, t.B);
    t.c1 = 2 * (ri - dot(t.A, t.B));
    t.c0 = ri * ri - dot(t.A, t.A);
    t.rmin = std::min({ri, rj, rk});

    if (abs(t.c2) < t.eps) {
        if (!allow_parabolic) return std::nullopt;
        t.kind = Kind::Parabolic;
        return t;
    }
    if (!need_points) {
        t.kind = t.c2 > 0 ? Kind::Hyperbolic : Kind::Elliptic;
        return t;
    }
    Vec X0;
    if (t.c2 > 0) {
        t.kind = Kind::Hyperbolic;
        // upper branch valid everywhere, lower branch invalid everywhere
        Real disc = t.c1 * t.c1 - 4 * t.c2 * t.c0;
        Real root = sqrt(disc < 0 ? Real(0) : disc);
        Real up = (-t.c1 + root) / (2 * t.c2), lo = (-t.c1 - root) / (2 * t.c2);
        if (up + t.rmin < t.eps || lo + t.rmin > -t.eps) return std::nullopt;
        X0 = t.point(up, 0);
    } else {
        t.kind = Kind::Elliptic;
        Real disc = t.c1 * t.c1 - 4 * t.c2 * t.c0;
        if (disc < t.eps) return std::nullopt;  // empty or point trisector
        Real root = sqrt(disc);
        Real R1 = (-t.c1 + root) / (2 * t.c2), R2 = (-t.c1 - root) / (2 * t.c2);
        if (R1 > R2) std::swap(R1, R2);
        if (R1 + t.rmin < t.eps) return std::nullopt;
        t.Rm = (R1 + R2) / 2;
        t.Rh = (R2 - R1) / 2;
        t.sh = sqrt(t.c2 * (t.Rm - R1) * (t.Rm - R2));
        X0 = t.point(R2, 0);
    }
    // orientation: tangent direction at X0 is +W; compare with the normal of
    // the tangency triangle (directions from X0 to the centers)
    Vec u[3];
    for (int n2 = 0; n2 < 3; ++n2) {
        Vec d = sub(t.b[n2].c, X0);
        u[n2] = mul(d, 1 / norm(d));
    }
    Real o = dot(cross(sub(u[1], u[0]), sub(u[2], u[0])), t.W);
    if (abs(o) < t.eps) return std::nullopt;
    t.sigma = o > 0 ? 1 : -1;
    return t;
}

// Orientation of the unit directions from X to the four centers.
std::optional<VertexLabelKind> label_at(const Tri& t, const Vec& X, const Ball& a) {
    const Vec* cs[4] = {&t.b[0].c, &t.b[1].c, &t.b[2].c, &a.c};
    Vec u[4];
    for (int n = 0; n < 4; ++n) {
        Vec d = sub(*cs[n], X);
        u[n] = mul(d, 1 / norm(d));
    }
    Real det = dot(sub(u[1], u[0]), cross(sub(u[2], u[0]), sub(u[3], u[0])));
    // orient = -sgn det
    if (abs(det) < t.eps) return std::nullopt;
    return det < 0 ? VertexLabelKind::Vijka : VertexLabelKind::Vikja;
}

// Vertices of site a on the trisector; nullopt when undecidable.
std::optional<std::vector<Vtx>> vertices(const Tri& t, const Ball& a) {
    const Real& eps = t.eps;
    Vec E = add(sub(t.b[0].c, a.c), t.A);
    Real h = dot(sub(t.b[0].c, a.c), t.W);
    Real q1 = 2 * dot(E, t.B) + t.c1 - 2 * a.r;
    Real q0 = dot(E, E) + t.c0 - a.r * a.r;
    std::vector<std::pair<Real, Real>> cand;  // (R, s)
    if (abs(h) < eps) {
        if (abs(q1) < eps) return std::nullopt;
        Real R = -q0 / q1;
        Real g = t.c2 * R * R + t.c1 * R + t.c0;
        if (abs(g) < eps) return std::nullopt;
        if (g > 0) {
            Real s = sqrt(g);
            cand.push_back({R, -s});
            cand.push_back({R, s});
        }
    } else {
        Real h4 = 4 * h * h;
        Real al = q1 * q1 - h4 * t.c2, be = 2 * q0 * q1 - h4 * t.c1, ga = q0 * q0 - h4 * t.c0;
        if (abs(al) < eps) {
            if (abs(be) < eps) return std::nullopt;
            Real R = -ga / be;
            cand.push_back({R, -(q0 + q1 * R) / (2 * h)});
        } else {
            Real disc = be * be - 4 * al * ga;
            Real scale = be * be + abs(4 * al * ga);
            if (abs(disc) < eps * (1 + scale)) return std::nullopt;
            if (disc > 0) {
                Real root = sqrt(disc);
                for (int sg : {-1, 1}) {
                    Real R = (-be + sg * root) / (2 * al);
                    cand.push_back({R, -(q0 + q1 * R) / (2 * h)});
                }
            }
        }
    }
    std::vector<Vtx> out;
    for (auto& [R, s] : cand) {
        if (abs(R + t.rmin) < eps) return std::nullopt;
        if (R + t.rmin < 0) continue;
        if (t.kind == Kind::Hyperbolic && 2 * t.c2 * R + t.c1 < 0) continue;  // lower branch
        Vec X = t.point(R, s);
        auto lab = label_at(t, X, a);
        if (!lab) return std::nullopt;
        out.push_back({R, s, t.tau_of(R, s), *lab});
    }
    std::sort(out.begin(), out.end(), [](const Vtx& x, const Vtx& y) { return x.tau < y.tau; });
    for (std::size_t n = 1; n < out.size(); ++n)
        if (out[n].tau - out[n - 1].tau < eps) return std::nullopt;
    return out;
}

bool is_in(const Real& f) { return f < 0; }

// Status (in shadow?) at a position; nullopt when too close to call.
std::optional<bool> status(const Tri& t, const Ball& q, const Real& tau) {
    Real f = t.member(q, tau);
    if (abs(f) < t.eps) return std::nullopt;
    return is_in(f);
}

// Number of status changes of q found by sampling the whole trisector.
std::optional<int> sampled_changes(const Tri& t, const Ball& q, int samples) {
    if (samples <= 0) return -1;
    std::optional<bool> prev;
    std::optional<bool> first;
    int changes = 0;
    Real pi = pi_();
    for (int n = 0; n < samples; ++n) {
        Real u = (Real(n) + Real(0.5)) / samples;
        Real tau = t.kind == Kind::Hyperbolic ? Real(16 * tan(pi * (u - Real(0.5)))) : Real(2 * pi * u);
        Real f = t.member(q, tau);
        if (abs(f) < t.eps) continue;
        bool in = is_in(f);
        if (!first) first = in;
        if (prev && *prev != in) ++changes;
        prev = in;
    }
    if (t.kind == Kind::Elliptic && prev && first && *prev != *first) ++changes;
    return changes;
}

// Statuses of the segments cut by the sorted positions `cuts` inside the
// open range (lo, hi); infinite ends allowed for hyperbolic trisectors.
std::optional<std::vector<bool>> segment_statuses(const Tri& t, const Ball& q, std::vector<Real> cuts,
                                                  const std::optional<Real>& lo,
                                                  const std::optional<Real>& hi) {
    std::vector<Real> pts;
    if (lo) pts.push_back(*lo);
    for (auto& c : cuts) pts.push_back(c);
    if (hi) pts.push_back(*hi);
    std::vector<Real> probes;
    if (!lo) probes.push_back(pts.empty() ? Real(0) : pts.front() - 1);
    for (std::size_t n = 1; n < pts.size(); ++n) probes.push_back((pts[n - 1] + pts[n]) / 2);
    if (!hi) probes.push_back(pts.empty() ? Real(0) : pts.back() + 1);
    if (!lo && !hi && pts.empty()) probes = {Real(0)};
    std::vector<bool> out;
    for (auto& p : probes) {
        auto s = status(t, q, p);
        if (!s) return std::nullopt;
        out.push_back(*s);
    }
    return out;
}

std::optional<ConflictOutcome> classify(const std::vector<bool>& st) {
    std::vector<bool> runs;
    for (bool b : st)
        if (runs.empty() || runs.back() != b) runs.push_back(b);
    if (runs.size() == 1) return runs[0] ? ConflictOutcome::FullConflict : ConflictOutcome::NoConflict;
    if (runs.size() == 2)
        return runs[0] ? ConflictOutcome::LeftVertexConflict : ConflictOutcome::RightVertexConflict;
    if (runs.size() == 3)
        return runs[0] ? ConflictOutcome::BothVerticesConflict : ConflictOutcome::InteriorConflict;
    return std::nullopt;
}

const Vtx* find_label(const std::vector<Vtx>& v, VertexLabelKind l) {
    const Vtx* out = nullptr;
    for (auto& x : v)
        if (x.label == l) {
            if (out) return nullptr;
            out = &x;
        }
    return out;
}

Real two_pi() { return 2 * pi_(); }

// Edge from `from` (or -inf) to `to` (or +inf); q's status per segment.
std::optional<ConflictOutcome> edge_outcome(const Tri& t, const Ball& q, std::optional<Real> from,
                                            std::optional<Real> to, const Config& cfg) {
    auto vq = vertices(t, q);
    if (!vq) return std::nullopt;
    if (cfg.sample_count > 0) {
        auto ch = sampled_changes(t, q, cfg.sample_count);
        if (!ch || *ch != static_cast<int>(vq->size())) return std::nullopt;
    }
    std::vector<Real> cuts;
    if (t.kind == Kind::Elliptic) {
        // shift so the edge starts at 0
        Real L = *to - *from;
        while (L <= 0) L += two_pi();
        for (auto& v : *vq) {
            Real p = v.tau - *from;
            while (p < 0) p += two_pi();
            while (p >= two_pi()) p -= two_pi();
            if (abs(p) < t.eps || abs(p - L) < t.eps) return std::nullopt;
            if (p < L) cuts.push_back(p);
        }
        std::sort(cuts.begin(), cuts.end());
        std::vector<Real> pts{Real(0)};
        for (auto& c : cuts) pts.push_back(c);
        pts.push_back(L);
        std::vector<bool> st;
        for (std::size_t n = 1; n < pts.size(); ++n) {
            auto s = status(t, q, *from + (pts[n - 1] + pts[n]) / 2);
            if (!s) return std::nullopt;
            st.push_back(*s);
        }
        return classify(st);
    }
    for (auto& v : *vq) {
        if ((from && abs(v.tau - *from) < t.eps) || (to && abs(v.tau - *to) < t.eps)) return std::nullopt;
        if ((!from || v.tau > *from) && (!to || v.tau < *to)) cuts.push_back(v.tau);
    }
    auto st = segment_statuses(t, q, cuts, from, to);
    if (!st) return std::nullopt;
    return classify(*st);
}

// The open edge (from, to) carries no vertex of q other than its own ends
// and lies outside sh(q).
std::optional<bool> edge_clear(const Tri& t, const Ball& q, const std::vector<Vtx>& vq, std::optional<Real> from,
                               std::optional<Real> to) {
    auto rel = [&](const Real& x) {
        Real p = x - *from;
        while (p < 0) p += two_pi();
        while (p >= two_pi()) p -= two_pi();
        return p;
    };
    Real probe;
    if (t.kind == Kind::Elliptic) {
        Real L = rel(*to);
        for (auto& v : vq) {
            Real p = rel(v.tau);
            if (abs(p) < t.eps || abs(p - L) < t.eps || abs(p - two_pi()) < t.eps) continue;
            if (p < L) return false;
        }
        probe = *from + L / 2;
    } else {
        for (auto& v : vq) {
            if ((from && abs(v.tau - *from) < t.eps) || (to && abs(v.tau - *to) < t.eps)) continue;
            if ((!from || v.tau > *from) && (!to || v.tau < *to)) return false;
        }
        probe = from && to ? Real((*from + *to) / 2) : (from ? Real(*from + 1) : Real(*to - 1));
    }
    auto s = status(t, q, probe);
    if (!s) return std::nullopt;
    return !*s;
}

}  // namespace

std::optional<std::vector<NumericVertex>> numeric_apollonius_spheres(const Site& i, const Site& j,
                                                                     const Site& k, const Site& a,
                                                                     const Config& cfg) {
    PrecisionScope ps(cfg.precision_bits);
    auto t = make_tri(i, j, k, cfg);
    if (!t) return std::nullopt;
    auto v = vertices(*t, B_(a));
    if (!v) return std::nullopt;
    std::vector<NumericVertex> out;
    for (auto& x : *v) {
        Vec X = t->point(x.R, x.s);
        out.push_back({{X[0].convert_to<double>(), X[1].convert_to<double>(), X[2].convert_to<double>()},
                       x.R.convert_to<double>(),
                       x.label,
                       x.tau.convert_to<double>()});
    }
    return out;
}

std::optional<ConeRelation> numeric_incone(const Site& a, const Site& b, const Site& c, const Config& cfg) {
    PrecisionScope ps(cfg.precision_bits);
    Real eps = eps_of(cfg);
    Vec dab = sub(V_(b.c), V_(a.c)), dac = sub(V_(c.c), V_(a.c));
    Real rab = R_(b.r) - R_(a.r), rac = R_(c.r) - R_(a.r);
    Real nab = dot(dab, dab);
    if (nab - rab * rab < eps) return std::nullopt;
    // unit normals n with n . dab = rab: a circle around n0
    Vec n0 = mul(dab, rab / nab);
    Real rad = sqrt(1 - rab * rab / nab);
    Vec e = std::abs(dab[0].convert_to<double>()) < 0.5 * norm(dab).convert_to<double>() ? Vec{1, 0, 0} : Vec{0, 1, 0};
    Vec e1 = cross(dab, e);
    e1 = mul(e1, 1 / norm(e1));
    Vec e2 = cross(dab, e1);
    e2 = mul(e2, 1 / norm(e2));
    auto f = [&](const Real& th) {
        Vec n = add(n0, add(mul(e1, rad * cos(th)), mul(e2, rad * sin(th))));
        return dot(n, dac) - rac;
    };
    const int S = 256;
    Real best = f(0), bestth = 0, worst = best;
    for (int n = 1; n < S; ++n) {
        Real th = two_pi() * n / S;
        Real v = f(th);
        if (v < best) {
            best = v;
            bestth = th;
        }
        if (v > worst) worst = v;
    }
    // golden-section refinement around the best sample
    Real lo = bestth - two_pi() / S, hi = bestth + two_pi() / S;
    const Real gr = (sqrt(Real(5)) - 1) / 2;
    for (int it = 0; it < 120; ++it) {
        Real x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
        if (f(x1) < f(x2))
            hi = x2;
        else
            lo = x1;
    }
    Real m = f((lo + hi) / 2);
    if (m > eps) return ConeRelation::Inside;
    if (m < -eps) return ConeRelation::Outside;
    return (worst - m) < eps ? ConeRelation::CTouch : ConeRelation::PTouch;
}

std::optional<TrisectorKind> numeric_tritype(const Site& i, const Site& j, const Site& k, const Config& cfg) {
    PrecisionScope ps(cfg.precision_bits);
    auto t = make_tri(i, j, k, cfg, true, false);
    if (!t) return std::nullopt;
    switch (t->kind) {
        case Kind::Hyperbolic: return TrisectorKind::Hyperbolic;
        case Kind::Elliptic: return TrisectorKind::Elliptic;
        case Kind::Parabolic: return TrisectorKind::Parabolic;
    }
    return std::nullopt;
}

std::optional<bool> numeric_trisector_exists(const Site& i, const Site& j, const Site& k, const Config& cfg) {
    PrecisionScope ps(cfg.precision_bits);
    auto t = make_tri(i, j, k, cfg, false, false);
    if (!t) return std::nullopt;
    if (t->kind == Kind::Hyperbolic) return make_tri(i, j, k, cfg) ? std::optional<bool>(true) : std::nullopt;
    Real disc = t->c1 * t->c1 - 4 * t->c2 * t->c0;
    if (abs(disc) < t->eps) return std::nullopt;
    if (disc < 0) return false;
    Real root = sqrt(disc);
    Real R1 = (-t->c1 + root) / (2 * t->c2), R2 = (-t->c1 - root) / (2 * t->c2);
    Real lo = R1 < R2 ? R1 : R2, hi = R1 < R2 ? R2 : R1;
    // the ellipse is valid either everywhere or nowhere
    if (abs(lo + t->rmin) < t->eps || abs(hi + t->rmin) < t->eps) return std::nullopt;
    if ((lo + t->rmin > 0) != (hi + t->rmin > 0)) return std::nullopt;
    return lo + t->rmin > 0;
}

std::optional<SignPair> numeric_distance(const Site& i, const Site& j, const Site& k, const Site& a,
                                         const Config& cfg) {
    PrecisionScope ps(cfg.precision_bits);
    auto t = make_tri(i, j, k, cfg);
    if (!t || t->kind != Kind::Hyperbolic) return std::nullopt;
    // limit of |X - C_a| - R - r_a as s -> +-inf
    Ball ba = B_(a);
    Vec E = add(sub(t->b[0].c, ba.c), t->A);
    Real h = dot(sub(t->b[0].c, ba.c), t->W);
    Real base = dot(E, t->B) + t->c1 / 2 - ba.r;
    Real slope = h * sqrt(t->c2);
    Real at_plus_s = base + slope, at_minus_s = base - slope;
    Real lim_minus = t->sigma > 0 ? at_minus_s : at_plus_s;
    Real lim_plus = t->sigma > 0 ? at_plus_s : at_minus_s;
    if (abs(lim_minus) < t->eps || abs(lim_plus) < t->eps) return std::nullopt;
    return SignPair{lim_minus < 0 ? Sign::Negative : Sign::Positive,
                    lim_plus < 0 ? Sign::Negative : Sign::Positive};
}

std::optional<ExistenceCount> numeric_existence(const Site& i, const Site& j, const Site& k, const Site& a,
                                                const Config& cfg) {
    PrecisionScope ps(cfg.precision_bits);
    auto t = make_tri(i, j, k, cfg);
    if (!t) return std::nullopt;
    auto v = vertices(*t, B_(a));
    if (!v) return std::nullopt;
    switch (v->size()) {
        case 0: return ExistenceCount::Zero;
        case 1: return ExistenceCount::One;
        default: return ExistenceCount::TwoDistinct;
    }
}

std::optional<ShadowKind> numeric_shadow(const Site& i, const Site& j, const Site& k, const Site& a,
                                         const Config& cfg) {
    PrecisionScope ps(cfg.precision_bits);
    auto t = make_tri(i, j, k, cfg);
    if (!t) return std::nullopt;
    Ball q = B_(a);
    auto v = vertices(*t, q);
    if (!v) return std::nullopt;
    if (cfg.sample_count > 0) {
        auto ch = sampled_changes(*t, q, cfg.sample_count);
        if (!ch || *ch != static_cast<int>(v->size())) return std::nullopt;
    }
    std::vector<Real> cuts;
    for (auto& x : *v) cuts.push_back(x.tau);
    using VL = VertexLabelKind;
    if (t->kind == Kind::Elliptic) {
        if (v->empty()) {
            auto s = status(*t, q, Real(0));
            if (!s) return std::nullopt;
            return *s ? ShadowKind::FullLine : ShadowKind::Empty;
        }
        if (v->size() != 2) return ShadowKind::Degenerate;
        auto s = status(*t, q, (cuts[0] + cuts[1]) / 2);
        if (!s) return std::nullopt;
        // in-arc must run positively from v_ikja to v_ijka
        const Vtx& start = *s ? (*v)[0] : (*v)[1];
        const Vtx& end = *s ? (*v)[1] : (*v)[0];
        if (start.label == VL::Vikja && end.label == VL::Vijka) return ShadowKind::Interval;
        if (start.label == VL::Vijka && end.label == VL::Vikja) return ShadowKind::Complement;
        return ShadowKind::Degenerate;
    }
    auto st = segment_statuses(*t, q, cuts, std::nullopt, std::nullopt);
    if (!st) return std::nullopt;
    const auto& s = *st;
    auto lab = [&](int n) { return (*v)[n].label; };
    if (v->empty()) return s[0] ? ShadowKind::FullLine : ShadowKind::Empty;
    if (v->size() == 1) {
        if (s[0] && !s[1] && lab(0) == VL::Vijka) return ShadowKind::LeftRay;
        if (!s[0] && s[1] && lab(0) == VL::Vikja) return ShadowKind::RightRay;
        return ShadowKind::Degenerate;
    }
    if (!s[0] && s[1] && !s[2] && lab(0) == VL::Vikja && lab(1) == VL::Vijka) return ShadowKind::Interval;
    if (s[0] && !s[1] && s[2] && lab(0) == VL::Vijka && lab(1) == VL::Vikja) return ShadowKind::Complement;
    return ShadowKind::Degenerate;
}

std::optional<Sign> numeric_insphere(const Site& i, const Site& j, const Site& k, const Site& a, const Site& b,
                                     const Config& cfg) {
    PrecisionScope ps(cfg.precision_bits);
    auto t = make_tri(i, j, k, cfg);
    if (!t) return std::nullopt;
    auto v = vertices(*t, B_(a));
    if (!v) return std::nullopt;
    const Vtx* x = find_label(*v, VertexLabelKind::Vijka);
    if (!x) return std::nullopt;
    Ball q = B_(b);
    Real f = norm(sub(t->point(x->R, x->s), q.c)) - (x->R + q.r);
    if (abs(f) < t->eps) return std::nullopt;
    return f < 0 ? Sign::Negative : Sign::Positive;
}

std::optional<VertexOrdering> numeric_order(const Site& i, const Site& j, const Site& k, const Site& a,
                                            const Site& b, const Config& cfg) {
    PrecisionScope ps(cfg.precision_bits);
    auto t = make_tri(i, j, k, cfg);
    if (!t || t->kind != Kind::Hyperbolic) return std::nullopt;
    auto va = vertices(*t, B_(a)), vb = vertices(*t, B_(b));
    if (!va || !vb) return std::nullopt;
    std::vector<std::pair<Real, OrderedVertex>> all;
    for (auto& x : *va) all.push_back({x.tau, {a.id, x.label}});
    for (auto& x : *vb) all.push_back({x.tau, {b.id, x.label}});
    std::sort(all.begin(), all.end(), [](auto& x, auto& y) { return x.first < y.first; });
    VertexOrdering out;
    for (std::size_t n = 0; n < all.size(); ++n) {
        if (n && all[n].first - all[n - 1].first < t->eps) return std::nullopt;
        out.push_back(all[n].second);
    }
    return out;
}

std::optional<ConflictOutcome> numeric_conflict(const Site& i, const Site& j, const Site& k, const Site& l,
                                                const Site& m, const Site& q, const Config& cfg) {
    PrecisionScope ps(cfg.precision_bits);
    auto t = make_tri(i, j, k, cfg);
    if (!t) return std::nullopt;
    auto vl = vertices(*t, B_(l)), vm = vertices(*t, B_(m));
    if (!vl || !vm) return std::nullopt;
    const Vtx* a = find_label(*vl, VertexLabelKind::Vijka);
    const Vtx* b = find_label(*vm, VertexLabelKind::Vikja);
    if (!a || !b) return std::nullopt;
    if (t->kind == Kind::Hyperbolic && !(a->tau < b->tau)) return std::nullopt;
    return edge_outcome(*t, B_(q), a->tau, b->tau, cfg);
}

std::optional<ConflictOutcome> numeric_right_conflict(const Site& i, const Site& j, const Site& k, const Site& l,
                                                      const Site& q, const Config& cfg) {
    PrecisionScope ps(cfg.precision_bits);
    auto t = make_tri(i, j, k, cfg);
    if (!t || t->kind != Kind::Hyperbolic) return std::nullopt;
    auto vl = vertices(*t, B_(l));
    if (!vl) return std::nullopt;
    const Vtx* a = find_label(*vl, VertexLabelKind::Vijka);
    if (!a) return std::nullopt;
    return edge_outcome(*t, B_(q), a->tau, std::nullopt, cfg);
}

std::optional<ConflictOutcome> numeric_left_conflict(const Site& i, const Site& j, const Site& k, const Site& m,
                                                     const Site& q, const Config& cfg) {
    PrecisionScope ps(cfg.precision_bits);
    auto t = make_tri(i, j, k, cfg);
    if (!t || t->kind != Kind::Hyperbolic) return std::nullopt;
    auto vm = vertices(*t, B_(m));
    if (!vm) return std::nullopt;
    const Vtx* b = find_label(*vm, VertexLabelKind::Vikja);
    if (!b) return std::nullopt;
    return edge_outcome(*t, B_(q), std::nullopt, b->tau, cfg);
}

std::optional<bool> numeric_valid_edge(const Site& i, const Site& j, const Site& k, const Site& l, const Site& m,
                                       const Config& cfg) {
    PrecisionScope ps(cfg.precision_bits);
    auto t = make_tri(i, j, k, cfg);
    if (!t) return std::nullopt;
    auto vl = vertices(*t, B_(l)), vm = vertices(*t, B_(m));
    if (!vl || !vm) return std::nullopt;
    const Vtx* a = find_label(*vl, VertexLabelKind::Vijka);
    const Vtx* b = find_label(*vm, VertexLabelKind::Vikja);
    if (!a || !b) return false;
    if (abs(a->tau - b->tau) < t->eps) return std::nullopt;
    if (t->kind == Kind::Hyperbolic && b->tau < a->tau) return false;
    for (const Site* s : {&l, &m}) {
        auto c = edge_clear(*t, B_(*s), s == &l ? *vl : *vm, a->tau, b->tau);
        if (!c || !*c) return c;
    }
    return true;
}

std::optional<bool> numeric_valid_infinite_edge(const Site& i, const Site& j, const Site& k, const Site& n,
                                                bool right, const Config& cfg) {
    PrecisionScope ps(cfg.precision_bits);
    auto t = make_tri(i, j, k, cfg);
    if (!t || t->kind != Kind::Hyperbolic) return std::nullopt;
    auto vn = vertices(*t, B_(n));
    if (!vn) return std::nullopt;
    const Vtx* v = find_label(*vn, right ? VertexLabelKind::Vijka : VertexLabelKind::Vikja);
    if (!v) return false;
    if (right) return edge_clear(*t, B_(n), *vn, v->tau, std::nullopt);
    return edge_clear(*t, B_(n), *vn, std::nullopt, v->tau);
}

}  // namespace apollo::oracle
