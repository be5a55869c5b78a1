#include "apollo/eps_field.hpp"

#include "apollo/errors.hpp"

#include <algorithm>
#include <limits>

namespace apollo::qsp {

Poly::Poly(mpq_class c) {
    if (sgn(c) != 0) c_.push_back(std::move(c));
}

Poly Poly::monomial(mpq_class c, std::size_t degree) {
    Poly p;
    if (sgn(c) == 0) return p;
    p.c_.assign(degree + 1, mpq_class(0));
    p.c_[degree] = std::move(c);
    return p;
}

void Poly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

std::size_t Poly::valuation() const {
    for (std::size_t n = 0; n < c_.size(); ++n)
        if (sgn(c_[n]) != 0) return n;
    return 0;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (std::size_t n = 0; n < r.c_.size(); ++n) {
        if (n < c_.size()) r.c_[n] += c_[n];
        if (n < o.c_.size()) r.c_[n] += o.c_[n];
    }
    r.trim();
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, mpq_class(0));
    for (std::size_t a = 0; a < c_.size(); ++a) {
        if (sgn(c_[a]) == 0) continue;
        for (std::size_t b = 0; b < o.c_.size(); ++b) r.c_[a + b] += c_[a] * o.c_[b];
    }
    r.trim();
    return r;
}

Poly Poly::scaled(const mpq_class& s) const {
    Poly r = *this;
    for (auto& x : r.c_) x *= s;
    r.trim();
    return r;
}

Poly Poly::shifted_down(std::size_t n) const {
    Poly r;
    if (n >= c_.size()) return r;
    r.c_.assign(c_.begin() + static_cast<std::ptrdiff_t>(n), c_.end());
    return r;
}

void Poly::divmod(const Poly& d, Poly& q, Poly& r) const {
    if (d.is_zero()) fail(ErrorKind::ContractViolation, "polynomial division by zero");
    r = *this;
    q = Poly();
    if (r.degree() < d.degree()) return;
    q.c_.assign(r.degree() - d.degree() + 1, mpq_class(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        std::size_t shift = r.degree() - d.degree();
        mpq_class f = r.leading() / d.leading();
        q.c_[shift] = f;
        for (std::size_t n = 0; n < d.c_.size(); ++n) r.c_[n + shift] -= f * d.c_[n];
        r.trim();
    }
    q.trim();
}

std::string Poly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t n = 0; n < c_.size(); ++n) {
        if (sgn(c_[n]) == 0) continue;
        if (!out.empty()) out += " + ";
        out += c_[n].get_str();
        if (n > 0) out += n == 1 ? "e" : "e^" + std::to_string(n);
    }
    return out;
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly q, r;
        a.divmod(b, q, r);
        a = std::move(b);
        b = r.is_zero() ? r : r.scaled(1 / r.leading());
    }
    return a.is_zero() ? a : a.scaled(1 / a.leading());
}

Rational::Rational(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

Rational Rational::eps_power(std::size_t n) { return Rational(Poly::monomial(1, n), Poly(mpq_class(1))); }

void Rational::normalize() {
    if (den_.is_zero()) fail(ErrorKind::ContractViolation, "division by zero in Q(eps)");
    if (num_.is_zero()) {
        den_ = Poly(mpq_class(1));
        return;
    }
    std::size_t v = std::min(num_.valuation(), den_.valuation());
    if (v > 0) {
        num_ = num_.shifted_down(v);
        den_ = den_.shifted_down(v);
    }
    if (den_.degree() > 0 && num_.degree() > 0) {
        Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            Poly q, r;
            num_.divmod(g, q, r);
            num_ = q;
            den_.divmod(g, q, r);
            den_ = q;
        }
    }
    mpq_class s = 1 / den_.leading();
    num_ = num_.scaled(s);
    den_ = den_.scaled(s);
}

int Rational::sign() const {
    if (num_.is_zero()) return 0;
    return sgn(num_.lowest()) * sgn(den_.lowest());
}

double Rational::get_d() const {
    if (num_.is_zero()) return 0;
    std::size_t vn = num_.valuation(), vd = den_.valuation();
    if (vn > vd) return 0;
    if (vn < vd) return sign() * std::numeric_limits<double>::infinity();
    return mpq_class(num_.lowest() / den_.lowest()).get_d();
}

std::string Rational::str() const {
    if (den_.degree() == 0 && den_[0] == 1) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return Rational(a.num_ + b.num_, a.den_);
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) { return Rational(a.num_ * b.num_, a.den_ * b.den_); }

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_.is_zero()) fail(ErrorKind::ContractViolation, "division by zero in Q(eps)");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

namespace {

// Square root of a polynomial with a perfect-square lowest coefficient, by
// the power-series recursion; checked by squaring.
bool poly_sqrt(const Poly& p, Poly& root) {
    if (p.is_zero()) {
        root = p;
        return true;
    }
    std::size_t v = p.valuation();
    if (v % 2 || p.degree() % 2 || sgn(p.lowest()) < 0) return false;
    Poly q = p.shifted_down(v);
    mpq_class c = q[0];
    if (!mpz_perfect_square_p(c.get_num_mpz_t()) || !mpz_perfect_square_p(c.get_den_mpz_t())) return false;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), c.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), c.get_den_mpz_t());
    const std::size_t half = static_cast<std::size_t>(q.degree()) / 2;
    std::vector<mpq_class> s(half + 1);
    s[0] = mpq_class(n, d);
    s[0].canonicalize();
    for (std::size_t m = 1; m <= half; ++m) {
        mpq_class acc = static_cast<int>(m) <= q.degree() ? q[m] : mpq_class(0);
        for (std::size_t i = 1; i < m; ++i) acc -= s[i] * s[m - i];
        s[m] = acc / (2 * s[0]);
    }
    Poly cand;
    for (std::size_t m = 0; m <= half; ++m) cand = cand + Poly::monomial(s[m], m);
    if (!(cand * cand == q)) return false;
    root = Poly::monomial(1, v / 2) * cand;
    return true;
}

}  // namespace

bool rational_sqrt(const Rational& s, Rational& root) {
    if (s.sign() < 0) return false;
    // sqrt(n/d) = sqrt(n d) / d
    Poly r;
    if (!poly_sqrt(s.num() * s.den(), r)) return false;
    root = Rational(r, s.den());
    if (root.sign() < 0) root = -root;
    return true;
}

}  // namespace apollo::qsp
