#include "apollo/exact.hpp"

#include "apollo/errors.hpp"

#include <cctype>
#include <cmath>

#ifndef APOLLO_EPSILON_FIELD

namespace apollo {

const char* to_string(Sign s) {
    switch (s) {
        case Sign::Negative: return "Negative";
        case Sign::Zero: return "Zero";
        case Sign::Positive: return "Positive";
    }
    return "?";
}

const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::ContractViolation: return "ContractViolation";
        case ErrorKind::ContainmentViolation: return "ContainmentViolation";
        case ErrorKind::InvalidTrisector: return "InvalidTrisector";
        case ErrorKind::NoSuchVertex: return "NoSuchVertex";
        case ErrorKind::OrderUndefined: return "OrderUndefined";
        case ErrorKind::InvalidEdge: return "InvalidEdge";
        case ErrorKind::RequiresPerturbedInSphere: return "RequiresPerturbedInSphere";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "?";
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class pow10(long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return r;
}

[[noreturn]] void bad(std::string_view text) {
    fail(ErrorKind::ParseError, "not an exact number: '" + std::string(text) + "'");
}

mpq_class parse_decimal(std::string_view t, std::string_view whole) {
    bool neg = false;
    if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
        neg = t[0] == '-';
        t.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = t.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view ex = t.substr(e + 1);
        bool eneg = false;
        if (!ex.empty() && (ex[0] == '+' || ex[0] == '-')) {
            eneg = ex[0] == '-';
            ex.remove_prefix(1);
        }
        if (!all_digits(ex) || ex.size() > 6) bad(whole);
        exponent = std::stol(std::string(ex));
        if (eneg) exponent = -exponent;
        t = t.substr(0, e);
    }
    std::string digits;
    if (auto dot = t.find('.'); dot != std::string_view::npos) {
        std::string_view ip = t.substr(0, dot), fp = t.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
            (!fp.empty() && !all_digits(fp)))
            bad(whole);
        digits = std::string(ip) + std::string(fp);
        exponent -= static_cast<long>(fp.size());
    } else {
        if (!all_digits(t)) bad(whole);
        digits = std::string(t);
    }
    mpz_class n(digits, 10);
    mpq_class r;
    if (exponent >= 0)
        r = mpq_class(n * pow10(exponent));
    else
        r = mpq_class(n, pow10(-exponent));
    r.canonicalize();
    return neg ? mpq_class(-r) : r;
}

}  // namespace

mpq_class parse_rational(std::string_view text) {
    std::string_view t = text;
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
    if (t.empty()) bad(text);
    if (auto slash = t.find('/'); slash != std::string_view::npos) {
        mpq_class num = parse_decimal(t.substr(0, slash), text);
        mpq_class den = parse_decimal(t.substr(slash + 1), text);
        if (sgn(den) == 0) bad(text);
        mpq_class r = num / den;
        return r;
    }
    return parse_decimal(t, text);
}

std::string format_rational(const mpq_class& s) {
    if (s.get_den() == 1) return s.get_num().get_str();
    return s.get_num().get_str() + "/" + s.get_den().get_str();
}

}  // namespace apollo

#endif

namespace APOLLO_NS {

Scalar parse_scalar(std::string_view text) { return Scalar(parse_rational(text)); }

#ifdef APOLLO_EPSILON_FIELD

std::string format_scalar(const Scalar& s) { return s.str(); }

bool exact_sqrt(const Scalar& s, Scalar& root) { return qsp::rational_sqrt(s, root); }

#else

std::string format_scalar(const Scalar& s) { return format_rational(s); }

bool exact_sqrt(const Scalar& s, Scalar& root) {
    if (sgn(s) < 0) return false;
    if (!mpz_perfect_square_p(s.get_num_mpz_t()) || !mpz_perfect_square_p(s.get_den_mpz_t()))
        return false;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), s.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), s.get_den_mpz_t());
    root = Scalar(n, d);
    root.canonicalize();
    return true;
}

#endif

QuadExt::QuadExt(Scalar p, Scalar q, Scalar delta)
    : p_(std::move(p)), q_(std::move(q)), delta_(std::move(delta)) {
    if (sgn(delta_) < 0) fail(ErrorKind::ContractViolation, "QuadExt with negative delta");
    normalize();
}

void QuadExt::normalize() {
    if (sgn(q_) == 0 || sgn(delta_) == 0) {
        q_ = 0;
        delta_ = 0;
        return;
    }
    Scalar root;
    if (exact_sqrt(delta_, root)) {
        p_ += q_ * root;
        q_ = 0;
        delta_ = 0;
    }
}

Sign QuadExt::sign() const {
    Sign sp = sign_of(p_), sq = sign_of(q_);
    if (sq == Sign::Zero) return sp;
    if (sp == Sign::Zero) return sq;
    if (sp == sq) return sp;
    // opposite signs: compare p^2 with q^2 delta
    Scalar diff = p_ * p_ - q_ * q_ * delta_;
    return sign_of(diff) == Sign::Negative ? sq : (sgn(diff) == 0 ? Sign::Zero : sp);
}

double QuadExt::approx() const {
    return p_.get_d() + q_.get_d() * std::sqrt(delta_.get_d());
}

const Scalar& QuadExt::shared_delta(const QuadExt& o) const {
    if (is_rational()) return o.delta_;
    if (o.is_rational() || delta_ == o.delta_) return delta_;
    fail(ErrorKind::ContractViolation, "QuadExt values from different fields combined");
}

QuadExt QuadExt::operator+(const QuadExt& o) const {
    const Scalar& d = shared_delta(o);
    return QuadExt(p_ + o.p_, q_ + o.q_, d);
}

QuadExt QuadExt::operator-(const QuadExt& o) const {
    const Scalar& d = shared_delta(o);
    return QuadExt(p_ - o.p_, q_ - o.q_, d);
}

QuadExt QuadExt::operator*(const QuadExt& o) const {
    const Scalar& d = shared_delta(o);
    return QuadExt(p_ * o.p_ + q_ * o.q_ * d, p_ * o.q_ + q_ * o.p_, d);
}

QuadExt QuadExt::inverse() const {
    Scalar norm = p_ * p_ - q_ * q_ * delta_;
    if (sgn(norm) == 0) fail(ErrorKind::ContractViolation, "QuadExt division by zero");
    return QuadExt(p_ / norm, -q_ / norm, delta_);
}

Sign compare(const QuadExt& a, const QuadExt& b) {
    if (a.is_rational() || b.is_rational() || a.delta() == b.delta()) return (a - b).sign();
    // x + y + z with x rational, y = q1 sqrt(d1), z = -q2 sqrt(d2)
    Scalar x = a.p() - b.p();
    Scalar y2 = a.q() * a.q() * a.delta();
    Scalar z2 = b.q() * b.q() * b.delta();
    Sign sy = sign_of(a.q()), sz = -sign_of(b.q());
    Sign syz;
    if (sy == sz)
        syz = sy;
    else {
        Sign c = sign_of(Scalar(y2 - z2));
        syz = c == Sign::Positive ? sy : (c == Sign::Negative ? sz : Sign::Zero);
    }
    Sign sx = sign_of(x);
    if (syz == Sign::Zero) return sx;
    if (sx == Sign::Zero || sx == syz) return syz;
    // compare x^2 with (y+z)^2 = y2 + z2 - 2 q1 q2 sqrt(d1 d2)
    QuadExt gap(x * x - y2 - z2, 2 * a.q() * b.q(), a.delta() * b.delta());
    Sign g = gap.sign();
    return g == Sign::Positive ? sx : (g == Sign::Negative ? syz : Sign::Zero);
}

}  // namespace APOLLO_NS
