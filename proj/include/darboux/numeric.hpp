#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace darboux {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    // cpp_rational's (num, den) constructor rejects negative denominators;
    // the division route normalizes sign and reduces.
    return Rational(num) / Rational(den);
}

inline Int num(const Rational& q) { return numerator(q); }
inline Int den(const Rational& q) { return denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Canonical text form: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline std::string to_string(const Int& n) { return n.str(); }

/// floor(sqrt(n)) for n >= 0.
inline Int isqrt_floor(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt of negative integer");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    Int r = isqrt_floor(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

/// If q is the square of a rational, returns that (nonnegative) square root.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    Int rn, rd;
    if (!is_perfect_square(numerator(q), &rn)) return std::nullopt;
    if (!is_perfect_square(denominator(q), &rd)) return std::nullopt;
    return make_rational(rn, rd);
}

inline unsigned bit_size(const Int& n) {
    if (n == 0) return 0;
    return static_cast<unsigned>(boost::multiprecision::msb(boost::multiprecision::abs(n))) + 1;
}

inline unsigned bit_size(const Rational& q) {
    unsigned a = bit_size(numerator(q));
    unsigned b = bit_size(denominator(q));
    return a > b ? a : b;
}

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

/// Element of the quadratic extension Q(sqrt(d)): value = a + b*sqrt(d).
/// d is carried per value; a value with b == 0 is compatible with any d.
/// d must not be a rational square (callers construct it from irreducible
/// quadratics, whose discriminant is never a square).
struct QuadExt {
    Rational a;
    Rational b;
    Rational d;

    QuadExt() = default;
    QuadExt(Rational a_) : a(std::move(a_)) {}
    QuadExt(int v) : a(v) {}
    QuadExt(Rational a_, Rational b_, Rational d_) : a(std::move(a_)), b(std::move(b_)), d(std::move(d_)) {
        if (b == 0) d = 0;
    }

    bool is_rational() const { return b == 0; }
    bool is_zero() const { return a == 0 && b == 0; }

    QuadExt conj() const { return QuadExt(a, -b, d); }
    Rational norm() const { return a * a - b * b * d; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a == y.a && x.b == y.b && (x.b == 0 || x.d == y.d);
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    static Rational join_d(const QuadExt& x, const QuadExt& y) {
        if (x.b == 0) return y.d;
        if (y.b == 0) return x.d;
        if (x.d != y.d) throw std::domain_error("QuadExt: mixing different quadratic fields");
        return x.d;
    }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        return QuadExt(x.a + y.a, x.b + y.b, join_d(x, y));
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        return QuadExt(x.a - y.a, x.b - y.b, join_d(x, y));
    }
    friend QuadExt operator-(const QuadExt& x) { return QuadExt(-x.a, -x.b, x.d); }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        Rational d = join_d(x, y);
        return QuadExt(x.a * y.a + x.b * y.b * d, x.a * y.b + x.b * y.a, d);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        if (y.is_zero()) throw std::domain_error("QuadExt division by zero");
        Rational n = y.norm();
        QuadExt c = y.conj();
        QuadExt p = x * c;
        return QuadExt(p.a / n, p.b / n, p.d);
    }
    QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
    QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
    QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
    QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }
};

inline std::string to_string(const QuadExt& v) {
    if (v.b == 0) return to_string(v.a);
    std::string s;
    if (v.a != 0) s += to_string(v.a) + (v.b > 0 ? " + " : " - ");
    else if (v.b < 0) s += "-";
    Rational ab = v.b < 0 ? Rational(-v.b) : v.b;
    if (ab != 1) s += "(" + to_string(ab) + ")*";
    s += "sqrt(" + to_string(v.d) + ")";
    return s;
}

// Field-concept helpers used by the templated polynomial code.
inline bool is_zero(const Rational& q) { return q == 0; }
inline bool is_zero(const Int& n) { return n == 0; }
inline bool is_zero(const QuadExt& v) { return v.is_zero(); }

// Exact division in the coefficient ring; `ok` is false when not divisible.
inline Int exact_div(const Int& a, const Int& b, bool& ok) {
    if (b == 0) { ok = false; return Int(0); }
    Int q = a / b;
    ok = (q * b == a);
    return ok ? q : Int(0);
}
inline Rational exact_div(const Rational& a, const Rational& b, bool& ok) {
    ok = (b != 0);
    return ok ? Rational(a / b) : Rational(0);
}
inline QuadExt exact_div(const QuadExt& a, const QuadExt& b, bool& ok) {
    ok = !b.is_zero();
    return ok ? a / b : QuadExt();
}

} // namespace darboux
