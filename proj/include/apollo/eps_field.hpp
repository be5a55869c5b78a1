#pragma once

// Rational functions in an infinitesimal eps > 0 with rational coefficients.
// The order is the limit order as eps -> 0+: the sign of a value is the sign
// of its lowest-order nonzero coefficient (numerator and denominator).

#include <gmpxx.h>

#include <string>
#include <vector>

namespace apollo::qsp {

// Dense polynomial, coefficient n is that of eps^n; no trailing zeros.
class Poly {
public:
    Poly() = default;
    explicit Poly(mpq_class c);
    static Poly monomial(mpq_class c, std::size_t degree);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::size_t valuation() const;  // index of the lowest nonzero coefficient
    const mpq_class& operator[](std::size_t n) const { return c_[n]; }
    const mpq_class& lowest() const { return c_[valuation()]; }
    const mpq_class& leading() const { return c_.back(); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const mpq_class& s) const;
    Poly shifted_down(std::size_t n) const;
    void divmod(const Poly& d, Poly& q, Poly& r) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    std::string str() const;

private:
    void trim();
    std::vector<mpq_class> c_;
};

Poly gcd(Poly a, Poly b);

class Rational {
public:
    Rational() : den_(mpq_class(1)) {}
    Rational(int v) : Rational(mpq_class(v)) {}
    Rational(long v) : Rational(mpq_class(v)) {}
    Rational(const mpq_class& v) : num_(v), den_(mpq_class(1)) {}
    Rational(Poly num, Poly den);

    // eps^n
    static Rational eps_power(std::size_t n);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    int sign() const;
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    // value of the limit eps -> 0+ (may be +-inf)
    double get_d() const;
    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(-num_, den_, true); }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return (a - b).num_.is_zero(); }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return (a - b).sign() < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    Rational(Poly num, Poly den, bool normalized) : num_(std::move(num)), den_(std::move(den)) {
        if (!normalized) normalize();
    }
    void normalize();

    Poly num_, den_;
};

inline int sgn(const Rational& r) { return r.sign(); }

// Square root within Q(eps) when the value is the square of a rational function.
bool rational_sqrt(const Rational& s, Rational& root);

}  // namespace apollo::qsp
