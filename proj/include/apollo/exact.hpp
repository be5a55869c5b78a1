#pragma once

#include "apollo/field.hpp"

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace apollo {

enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

inline Sign sign_of_int(int v) {
    return v < 0 ? Sign::Negative : (v > 0 ? Sign::Positive : Sign::Zero);
}
inline int to_int(Sign s) { return static_cast<int>(s); }
inline Sign operator-(Sign s) { return sign_of_int(-to_int(s)); }
inline Sign operator*(Sign a, Sign b) { return sign_of_int(to_int(a) * to_int(b)); }
inline bool operator<(Sign a, Sign b) { return to_int(a) < to_int(b); }

const char* to_string(Sign s);

// Parses "12", "-3.25", "1e-3", "7/8". Throws ParseError on anything else.
mpq_class parse_rational(std::string_view text);
std::string format_rational(const mpq_class& s);

}  // namespace apollo

#ifdef APOLLO_EPSILON_FIELD
#include "apollo/eps_field.hpp"
#endif

namespace APOLLO_NS {

#ifdef APOLLO_EPSILON_FIELD
using Scalar = qsp::Rational;
#else
using Scalar = mpq_class;
#endif

inline Sign sign_of(const Scalar& s) {
    int v = sgn(s);
    return v < 0 ? Sign::Negative : (v > 0 ? Sign::Positive : Sign::Zero);
}

Scalar parse_scalar(std::string_view text);
// "p/q", or "p" when the denominator is one.
std::string format_scalar(const Scalar& s);

// Exact sqrt if the (nonnegative) rational is a perfect square.
bool exact_sqrt(const Scalar& s, Scalar& root);

// p + q*sqrt(delta), delta >= 0. Two values can be combined only when they
// live in the same field (same delta) or one of them is rational (q == 0).
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(Scalar p) : p_(std::move(p)) {}
    QuadExt(Scalar p, Scalar q, Scalar delta);

    const Scalar& p() const { return p_; }
    const Scalar& q() const { return q_; }
    const Scalar& delta() const { return delta_; }
    bool is_rational() const { return sgn(q_) == 0; }

    Sign sign() const;
    double approx() const;

    QuadExt operator+(const QuadExt& o) const;
    QuadExt operator-(const QuadExt& o) const;
    QuadExt operator*(const QuadExt& o) const;
    QuadExt operator-() const { return QuadExt(-p_, -q_, delta_); }
    QuadExt inverse() const;
    QuadExt operator/(const QuadExt& o) const { return *this * o.inverse(); }
    QuadExt conjugate() const { return QuadExt(p_, -q_, delta_); }

private:
    void normalize();
    const Scalar& shared_delta(const QuadExt& o) const;

    Scalar p_ = 0, q_ = 0, delta_ = 0;
};

// Sign of p1 + q1 sqrt(d1) - (p2 + q2 sqrt(d2)) for possibly different fields.
Sign compare(const QuadExt& a, const QuadExt& b);

}  // namespace APOLLO_NS
