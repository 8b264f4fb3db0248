#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "darboux/numeric.hpp"
#include "darboux/poly1.hpp"

namespace darboux {

constexpr long kExponentCap = 1000000; // fail loudly instead of hanging

/// Exponent pair of a monomial x^i * y^j.
struct Exp {
    int i = 0;
    int j = 0;
    int total() const { return i + j; }
    friend bool operator==(const Exp& a, const Exp& b) { return a.i == b.i && a.j == b.j; }
};

/// Graded-lexicographic order with x > y, ascending (leading term last).
struct GlexLess {
    bool operator()(const Exp& a, const Exp& b) const {
        if (a.total() != b.total()) return a.total() < b.total();
        return a.i < b.i;
    }
};

/// Sparse bivariate polynomial over a field K, canonical term order
/// graded-lex with x > y. No zero coefficients are stored; the zero
/// polynomial has an empty term map and degree -1.
template <class K>
struct BiPolyT {
    std::map<Exp, K, GlexLess> terms;

    BiPolyT() = default;
    explicit BiPolyT(K c) {
        if (!is_zero(c)) terms.emplace(Exp{0, 0}, std::move(c));
    }

    static BiPolyT zero() { return {}; }
    static BiPolyT constant(K c) { return BiPolyT(std::move(c)); }
    static BiPolyT monomial(int i, int j, K c) {
        BiPolyT p;
        if (i < 0 || j < 0) throw std::domain_error("negative exponent");
        if (i > kExponentCap || j > kExponentCap) throw std::domain_error("exponent overflow");
        if (!is_zero(c)) p.terms.emplace(Exp{i, j}, std::move(c));
        return p;
    }
    static BiPolyT var_x() { return monomial(1, 0, K(1)); }
    static BiPolyT var_y() { return monomial(0, 1, K(1)); }

    bool zero_p() const { return terms.empty(); }
    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms) d = std::max(d, e.total());
        return d;
    }
    int degree_x() const {
        int d = -1;
        for (const auto& [e, c] : terms) d = std::max(d, e.i);
        return d;
    }
    int degree_y() const {
        int d = -1;
        for (const auto& [e, c] : terms) d = std::max(d, e.j);
        return d;
    }

    K coeff(int i, int j) const {
        auto it = terms.find(Exp{i, j});
        return it == terms.end() ? K(0) : it->second;
    }

    /// Leading term in graded-lex order.
    std::pair<Exp, K> leading() const {
        if (terms.empty()) throw std::domain_error("leading term of zero polynomial");
        auto it = terms.rbegin();
        return {it->first, it->second};
    }

    void add_term(const Exp& e, const K& c) {
        if (is_zero(c)) return;
        auto [it, inserted] = terms.emplace(e, c);
        if (!inserted) {
            it->second = it->second + c;
            if (is_zero(it->second)) terms.erase(it);
        }
    }

    friend BiPolyT operator+(const BiPolyT& a, const BiPolyT& b) {
        BiPolyT r = a;
        for (const auto& [e, c] : b.terms) r.add_term(e, c);
        return r;
    }
    friend BiPolyT operator-(const BiPolyT& a, const BiPolyT& b) {
        BiPolyT r = a;
        for (const auto& [e, c] : b.terms) r.add_term(e, K(0) - c);
        return r;
    }
    friend BiPolyT operator-(const BiPolyT& a) {
        BiPolyT r;
        for (const auto& [e, c] : a.terms) r.terms.emplace(e, K(0) - c);
        return r;
    }
    friend BiPolyT operator*(const BiPolyT& a, const BiPolyT& b) {
        BiPolyT r;
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms) r.add_term(Exp{ea.i + eb.i, ea.j + eb.j}, ca * cb);
        return r;
    }
    friend bool operator==(const BiPolyT& a, const BiPolyT& b) { return a.terms == b.terms; }
    friend bool operator!=(const BiPolyT& a, const BiPolyT& b) { return !(a == b); }

    BiPolyT scaled(const K& s) const {
        BiPolyT r;
        if (is_zero(s)) return r;
        for (const auto& [e, c] : terms) r.terms.emplace(e, c * s);
        return r;
    }

    BiPolyT pow(long e) const {
        if (e < 0) throw std::domain_error("negative power");
        if (e > kExponentCap) throw std::domain_error("exponent overflow");
        BiPolyT r = constant(K(1));
        BiPolyT base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = (e >>= 1) ? base * base : base;
        }
        return r;
    }

    BiPolyT dx() const {
        BiPolyT r;
        for (const auto& [e, c] : terms)
            if (e.i > 0) r.terms.emplace(Exp{e.i - 1, e.j}, c * K(e.i));
        return r;
    }
    BiPolyT dy() const {
        BiPolyT r;
        for (const auto& [e, c] : terms)
            if (e.j > 0) r.terms.emplace(Exp{e.i, e.j - 1}, c * K(e.j));
        return r;
    }

    template <class T>
    T eval(const T& x, const T& y) const {
        // per-term with cached powers
        int dx_ = std::max(degree_x(), 0), dy_ = std::max(degree_y(), 0);
        std::vector<T> px(dx_ + 1, T(1)), py(dy_ + 1, T(1));
        for (int i = 1; i <= dx_; ++i) px[i] = px[i - 1] * x;
        for (int j = 1; j <= dy_; ++j) py[j] = py[j - 1] * y;
        T acc = T(0);
        for (const auto& [e, c] : terms) acc = acc + T(c) * px[e.i] * py[e.j];
        return acc;
    }

    /// Substitute polynomials for both variables.
    BiPolyT subst(const BiPolyT& sx, const BiPolyT& sy) const {
        BiPolyT acc;
        for (const auto& [e, c] : terms) acc = acc + (sx.pow(e.i) * sy.pow(e.j)).scaled(c);
        return acc;
    }

    /// x -> x + t*y (the genericity shear; degree-preserving).
    BiPolyT shear_x(const K& t) const {
        BiPolyT sx = var_x() + var_y().scaled(t);
        return subst(sx, var_y());
    }

    /// Translation to move the point (a, b) to the origin.
    BiPolyT translated(const K& a, const K& b) const {
        BiPolyT sx = var_x() + constant(a);
        BiPolyT sy = var_y() + constant(b);
        return subst(sx, sy);
    }

    BiPolyT swap_xy() const {
        BiPolyT r;
        for (const auto& [e, c] : terms) r.terms.emplace(Exp{e.j, e.i}, c);
        return r;
    }

    /// Restriction f(x, 0) as a univariate polynomial in x.
    UniPoly<K> restrict_y0() const {
        UniPoly<K> r;
        for (const auto& [e, c] : terms)
            if (e.j == 0) {
                if (static_cast<int>(r.c.size()) <= e.i) r.c.resize(e.i + 1, K(0));
                r.c[e.i] = c;
            }
        r.trim();
        return r;
    }
    /// Restriction f(0, y) as a univariate polynomial in y.
    UniPoly<K> restrict_x0() const {
        UniPoly<K> r;
        for (const auto& [e, c] : terms)
            if (e.i == 0) {
                if (static_cast<int>(r.c.size()) <= e.j) r.c.resize(e.j + 1, K(0));
                r.c[e.j] = c;
            }
        r.trim();
        return r;
    }

    /// f(x0, y) as a univariate polynomial in y.
    template <class T>
    UniPoly<T> eval_x(const T& x0) const {
        int dx_ = std::max(degree_x(), 0);
        std::vector<T> px(dx_ + 1, T(1));
        for (int i = 1; i <= dx_; ++i) px[i] = px[i - 1] * x0;
        UniPoly<T> r;
        for (const auto& [e, c] : terms) {
            if (static_cast<int>(r.c.size()) <= e.j) r.c.resize(e.j + 1, T(0));
            r.c[e.j] = r.c[e.j] + T(c) * px[e.i];
        }
        r.trim();
        return r;
    }
    /// f(x, y0) as a univariate polynomial in x.
    template <class T>
    UniPoly<T> eval_y(const T& y0) const {
        int dy_ = std::max(degree_y(), 0);
        std::vector<T> py(dy_ + 1, T(1));
        for (int j = 1; j <= dy_; ++j) py[j] = py[j - 1] * y0;
        UniPoly<T> r;
        for (const auto& [e, c] : terms) {
            if (static_cast<int>(r.c.size()) <= e.i) r.c.resize(e.i + 1, T(0));
            r.c[e.i] = r.c[e.i] + T(c) * py[e.j];
        }
        r.trim();
        return r;
    }

    /// Homogeneous part of total degree d.
    BiPolyT homogeneous_part(int d) const {
        BiPolyT r;
        for (const auto& [e, c] : terms)
            if (e.total() == d) r.terms.emplace(e, c);
        return r;
    }
    bool is_homogeneous() const {
        if (terms.empty()) return true;
        int d = terms.begin()->first.total();
        for (const auto& [e, c] : terms)
            if (e.total() != d) return false;
        return true;
    }
    /// Lowest total degree among terms (-1 for zero).
    int order_at_origin() const {
        int d = -1;
        for (const auto& [e, c] : terms) d = (d < 0) ? e.total() : std::min(d, e.total());
        return d;
    }

    /// Normalize so the graded-lex leading coefficient is 1.
    BiPolyT monic_glex() const {
        if (terms.empty()) return *this;
        return scaled(K(1) / leading().second);
    }
};

using BiPoly = BiPolyT<Rational>;

template <class K>
bool is_zero(const BiPolyT<K>& p) {
    return p.zero_p();
}

template <class K, class F>
auto map_coeffs(const BiPolyT<K>& p, F&& f) {
    using D = decltype(f(std::declval<K>()));
    BiPolyT<D> r;
    for (const auto& [e, c] : p.terms) {
        D v = f(c);
        if (!is_zero(v)) r.terms.emplace(e, std::move(v));
    }
    return r;
}

/// All homogeneous parts, indexed 0..deg(f); zero forms where absent.
template <class K>
std::vector<BiPolyT<K>> homogeneous_parts(const BiPolyT<K>& f) {
    int d = f.degree();
    std::vector<BiPolyT<K>> out(std::max(d + 1, 0));
    for (const auto& [e, c] : f.terms) out[e.total()].terms.emplace(e, c);
    return out;
}

/// View as a polynomial in y with coefficients in K[x].
template <class K>
UniPoly<UniPoly<K>> as_poly_in_y(const BiPolyT<K>& f) {
    UniPoly<UniPoly<K>> r;
    for (const auto& [e, c] : f.terms) {
        if (static_cast<int>(r.c.size()) <= e.j) r.c.resize(e.j + 1, UniPoly<K>());
        if (static_cast<int>(r.c[e.j].c.size()) <= e.i) r.c[e.j].c.resize(e.i + 1, K(0));
        r.c[e.j].c[e.i] = c;
    }
    for (auto& q : r.c) q.trim();
    r.trim();
    return r;
}

template <class K>
BiPolyT<K> from_poly_in_y(const UniPoly<UniPoly<K>>& p) {
    BiPolyT<K> r;
    for (int j = 0; j <= p.degree(); ++j)
        for (int i = 0; i <= p.c[j].degree(); ++i)
            if (!is_zero(p.c[j].c[i])) r.terms.emplace(Exp{i, j}, p.c[j].c[i]);
    return r;
}

/// Exact division f / g (optional-style): ok=false when g does not divide f.
/// Graded-lex normal-form division with the single divisor g: the remainder
/// is zero exactly when g | f.
template <class K>
BiPolyT<K> exact_divide(const BiPolyT<K>& f, const BiPolyT<K>& g, bool& ok) {
    if (g.zero_p()) throw std::domain_error("division by zero polynomial");
    BiPolyT<K> rem = f, q;
    auto [ge, gc] = g.leading();
    while (!rem.zero_p()) {
        auto [re, rc] = rem.leading();
        if (re.i < ge.i || re.j < ge.j) { ok = false; return {}; }
        Exp sh{re.i - ge.i, re.j - ge.j};
        K t = rc / gc;
        q.add_term(sh, t);
        rem = rem - g * BiPolyT<K>::monomial(sh.i, sh.j, t);
    }
    ok = true;
    return q;
}

/// UniPoly in x/y embedded back into two variables.
template <class K>
BiPolyT<K> from_unipoly_x(const UniPoly<K>& p) {
    BiPolyT<K> r;
    for (int i = 0; i <= p.degree(); ++i)
        if (!is_zero(p.c[i])) r.terms.emplace(Exp{i, 0}, p.c[i]);
    return r;
}
template <class K>
BiPolyT<K> from_unipoly_y(const UniPoly<K>& p) {
    BiPolyT<K> r;
    for (int j = 0; j <= p.degree(); ++j)
        if (!is_zero(p.c[j])) r.terms.emplace(Exp{0, j}, p.c[j]);
    return r;
}

/// Weighted chart substitution: returns u^w * f(1/u, v/u) as a polynomial in
/// (u, v) (stored with u in the x slot, v in the y slot). Requires
/// w >= deg f so all denominators clear.
template <class K>
BiPolyT<K> chart_clear(const BiPolyT<K>& f, int w) {
    if (f.degree() > w) throw std::domain_error("chart weight below degree");
    BiPolyT<K> r;
    for (const auto& [e, c] : f.terms) r.add_term(Exp{w - e.i - e.j, e.j}, c);
    return r;
}

/// Canonical text form: graded-lex descending, explicit '*', '^'.
inline std::string monomial_string(const Exp& e, const Rational& c, const std::string& vx, const std::string& vy) {
    Rational a = c < 0 ? Rational(-c) : c;
    std::string s;
    bool have_var = e.i > 0 || e.j > 0;
    if (!have_var) return to_string(a);
    if (a != 1) s += to_string(a) + "*";
    if (e.i > 0) {
        s += vx;
        if (e.i > 1) s += "^" + std::to_string(e.i);
        if (e.j > 0) s += "*";
    }
    if (e.j > 0) {
        s += vy;
        if (e.j > 1) s += "^" + std::to_string(e.j);
    }
    return s;
}

inline std::string to_string(const BiPoly& f, const std::string& vx = "x", const std::string& vy = "y") {
    if (f.zero_p()) return "0";
    std::string out;
    for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it) {
        const auto& [e, c] = *it;
        bool neg = c < 0;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        out += monomial_string(e, c, vx, vy);
    }
    return out;
}

} // namespace darboux
