#pragma once

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "darboux/numeric.hpp"

namespace darboux {

/// Dense univariate polynomial over a coefficient ring C.
/// Invariant: no trailing zero coefficients; the zero polynomial has an
/// empty coefficient vector and degree -1.
template <class C>
struct UniPoly {
    std::vector<C> c; // c[i] multiplies z^i

    UniPoly() = default;
    explicit UniPoly(C c0) {
        if (!is_zero(c0)) c.push_back(std::move(c0));
    }
    explicit UniPoly(std::vector<C> cs) : c(std::move(cs)) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly one() { return UniPoly(C(1)); }
    static UniPoly monomial(int deg, C coeff) {
        UniPoly p;
        if (is_zero(coeff)) return p;
        p.c.assign(deg + 1, C(0));
        p.c[deg] = std::move(coeff);
        return p;
    }

    void trim() {
        while (!c.empty() && is_zero(c.back())) c.pop_back();
    }

    bool zero_p() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const C& lc() const {
        if (c.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c.back();
    }
    C coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c.size())) return C(0);
        return c[i];
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c == b.c; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        UniPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), C(0));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
        r.trim();
        return r;
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        UniPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), C(0));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] - b.c[i];
        r.trim();
        return r;
    }
    friend UniPoly operator-(const UniPoly& a) {
        UniPoly r = a;
        for (auto& x : r.c) x = C(0) - x;
        return r;
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.zero_p() || b.zero_p()) return UniPoly();
        UniPoly r;
        r.c.assign(a.c.size() + b.c.size() - 1, C(0));
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (is_zero(a.c[i])) continue;
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        }
        r.trim();
        return r;
    }

    UniPoly scaled(const C& s) const {
        UniPoly r;
        if (is_zero(s)) return r;
        r.c = c;
        for (auto& x : r.c) x = x * s;
        r.trim();
        return r;
    }

    UniPoly shifted(int k) const { // multiply by z^k
        if (zero_p() || k == 0) return *this;
        UniPoly r;
        r.c.assign(c.size() + k, C(0));
        for (size_t i = 0; i < c.size(); ++i) r.c[i + k] = c[i];
        return r;
    }

    UniPoly derivative() const {
        UniPoly r;
        if (c.size() <= 1) return r;
        r.c.resize(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) r.c[i - 1] = c[i] * C(static_cast<int>(i));
        r.trim();
        return r;
    }

    template <class T>
    T eval(const T& x) const {
        T acc = T(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + T(*it);
        return acc;
    }
};

template <class C>
bool is_zero(const UniPoly<C>& p) {
    return p.zero_p();
}

template <class C, class F>
auto map_coeffs(const UniPoly<C>& p, F&& f) {
    using D = decltype(f(std::declval<C>()));
    UniPoly<D> r;
    r.c.reserve(p.c.size());
    for (const auto& x : p.c) r.c.push_back(f(x));
    r.trim();
    return r;
}

/// Exact quotient a / b over the coefficient ring (long division where every
/// leading-coefficient division must be exact); ok=false when b does not
/// divide a.
template <class C>
UniPoly<C> exact_div(const UniPoly<C>& a, const UniPoly<C>& b, bool& ok) {
    if (b.zero_p()) { ok = false; return {}; }
    if (a.zero_p()) { ok = true; return {}; }
    if (a.degree() < b.degree()) { ok = false; return {}; }
    UniPoly<C> rem = a, q;
    q.c.assign(a.degree() - b.degree() + 1, C(0));
    while (!rem.zero_p() && rem.degree() >= b.degree()) {
        bool cok = false;
        C t = exact_div(rem.lc(), b.lc(), cok);
        if (!cok) { ok = false; return {}; }
        int sh = rem.degree() - b.degree();
        q.c[sh] = t;
        rem = rem - b.scaled(t).shifted(sh);
    }
    ok = rem.zero_p();
    if (!ok) return {};
    q.trim();
    return q;
}

/// Division with remainder over a coefficient field.
template <class C>
std::pair<UniPoly<C>, UniPoly<C>> divmod_field(const UniPoly<C>& a, const UniPoly<C>& b) {
    if (b.zero_p()) throw std::domain_error("polynomial division by zero");
    UniPoly<C> q, r = a;
    if (a.degree() < b.degree()) return {q, r};
    q.c.assign(a.degree() - b.degree() + 1, C(0));
    while (!r.zero_p() && r.degree() >= b.degree()) {
        C t = r.lc() / b.lc();
        int sh = r.degree() - b.degree();
        q.c[sh] = q.c[sh] + t;
        r = r - b.scaled(t).shifted(sh);
    }
    q.trim();
    return {q, r};
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b, ring ops only.
template <class C>
UniPoly<C> pseudo_rem(const UniPoly<C>& a, const UniPoly<C>& b) {
    if (b.zero_p()) throw std::domain_error("pseudo-division by zero");
    int d = a.degree() - b.degree();
    if (d < 0) return a;
    UniPoly<C> r = a;
    const C& lb = b.lc();
    for (int k = d; k >= 0; --k) {
        if (r.degree() == b.degree() + k) {
            C top = r.lc();
            r = r.scaled(lb) - b.scaled(top).shifted(k);
        } else {
            r = r.scaled(lb);
        }
    }
    return r;
}

// ---- coefficient gcds used for contents ------------------------------------

inline Int ring_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

// Over a field every nonzero element is a unit.
inline Rational ring_gcd(const Rational& a, const Rational& b) {
    return (a == 0 && b == 0) ? Rational(0) : Rational(1);
}
inline QuadExt ring_gcd(const QuadExt& a, const QuadExt& b) {
    return (a.is_zero() && b.is_zero()) ? QuadExt() : QuadExt(1);
}

template <class C>
C content(const UniPoly<C>& p) {
    C g = C(0);
    for (const auto& x : p.c) {
        if (is_zero(x)) continue;
        g = ring_gcd(g, x);
    }
    return g;
}

template <class C>
UniPoly<C> primitive_part(const UniPoly<C>& p) {
    if (p.zero_p()) return p;
    C g = content(p);
    bool ok = false;
    UniPoly<C> r = exact_div(p, UniPoly<C>(g), ok);
    assert(ok);
    return r;
}

/// gcd by the subresultant pseudo-remainder sequence; C is a UFD with
/// ring_gcd and exact_div. Result is the primitive gcd times the gcd of the
/// contents (no further normalization).
template <class C>
UniPoly<C> gcd_subresultant(UniPoly<C> a, UniPoly<C> b) {
    if (a.zero_p()) return b;
    if (b.zero_p()) return a;
    C ca = content(a), cb = content(b);
    C cg = ring_gcd(ca, cb);
    bool ok = false;
    a = exact_div(a, UniPoly<C>(ca), ok);
    b = exact_div(b, UniPoly<C>(cb), ok);
    if (a.degree() < b.degree()) std::swap(a, b);

    // Brown's subresultant PRS; beta-division is exact at every step.
    C psi = C(0) - C(1);
    int delta = a.degree() - b.degree();
    C beta = (delta % 2 == 0) ? (C(0) - C(1)) : C(1); // (-1)^(delta+1)
    while (true) {
        if (b.degree() == 0) {
            // nonzero constant: coprime primitive parts
            return UniPoly<C>(cg);
        }
        UniPoly<C> r = pseudo_rem(a, b);
        if (r.zero_p()) {
            UniPoly<C> g = primitive_part(b);
            return g * UniPoly<C>(cg);
        }
        r = exact_div(r, UniPoly<C>(beta), ok);
        assert(ok && "subresultant beta division must be exact");
        C gamma = b.lc();
        // psi update uses the old delta
        if (delta == 0) {
            // psi unchanged
        } else {
            C num = C(1);
            C mg = C(0) - gamma;
            for (int i = 0; i < delta; ++i) num = num * mg;
            if (delta == 1) {
                psi = num;
            } else {
                C dpow = C(1);
                for (int i = 0; i < delta - 1; ++i) dpow = dpow * psi;
                psi = exact_div(num, dpow, ok);
                assert(ok && "subresultant psi division must be exact");
            }
        }
        a = b;
        b = r;
        delta = a.degree() - b.degree();
        C ppow = C(1);
        for (int i = 0; i < delta; ++i) ppow = ppow * psi;
        beta = (C(0) - gamma) * ppow;
    }
}

/// Monic gcd over a coefficient field.
template <class C>
UniPoly<C> gcd_field(UniPoly<C> a, UniPoly<C> b) {
    while (!b.zero_p()) {
        auto [q, r] = divmod_field(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.zero_p()) return a;
    return a.scaled(C(1) / a.lc());
}

// ---- rational <-> integer polynomial conversions ---------------------------

inline UniPoly<Int> clear_denominators(const UniPoly<Rational>& p, Int* scale = nullptr) {
    Int l = 1;
    for (const auto& q : p.c) l = boost::multiprecision::lcm(l, denominator(q));
    UniPoly<Int> r;
    r.c.reserve(p.c.size());
    for (const auto& q : p.c) r.c.push_back(numerator(q) * (l / denominator(q)));
    r.trim();
    if (scale) *scale = l;
    return r;
}

inline UniPoly<Rational> to_rational(const UniPoly<Int>& p) {
    return map_coeffs(p, [](const Int& n) { return Rational(n); });
}

/// Monic gcd over Q, computed fraction-free over Z.
inline UniPoly<Rational> gcd_rational(const UniPoly<Rational>& a, const UniPoly<Rational>& b) {
    if (a.zero_p() && b.zero_p()) return {};
    UniPoly<Int> za = clear_denominators(a), zb = clear_denominators(b);
    UniPoly<Int> g = gcd_subresultant(za, zb);
    UniPoly<Rational> r = to_rational(g);
    return r.scaled(Rational(1) / r.lc());
}

inline UniPoly<Rational> ring_gcd(const UniPoly<Rational>& a, const UniPoly<Rational>& b) {
    return gcd_rational(a, b);
}

/// Generic coefficient-gcd over K[x] for a field K (monic Euclid); the
/// Rational overload above stays fraction-free.
template <class K>
UniPoly<K> ring_gcd(const UniPoly<K>& a, const UniPoly<K>& b) {
    return gcd_field(a, b);
}

/// Squarefree (Yun) decomposition over a field of characteristic 0:
/// f = unit * prod parts[i].first ^ parts[i].second, the parts monic,
/// squarefree and pairwise coprime. `gcd` must return monic gcds.
template <class C, class Gcd>
std::vector<std::pair<UniPoly<C>, int>> squarefree_decomposition(const UniPoly<C>& f, Gcd&& gcd) {
    if (f.zero_p()) throw std::domain_error("squarefree decomposition of zero");
    std::vector<std::pair<UniPoly<C>, int>> out;
    UniPoly<C> fm = f.scaled(C(1) / f.lc());
    if (fm.degree() == 0) return out;
    UniPoly<C> fp = fm.derivative();
    UniPoly<C> g = gcd(fm, fp);
    if (g.degree() == 0) {
        out.push_back({fm, 1});
        return out;
    }
    auto [w0, rw] = divmod_field(fm, g);
    auto [y0, ry] = divmod_field(fp, g);
    assert(rw.zero_p() && ry.zero_p());
    UniPoly<C> w = w0, y = y0;
    int i = 1;
    while (w.degree() > 0) {
        UniPoly<C> z = y - w.derivative();
        UniPoly<C> s = gcd(w, z);
        if (s.degree() > 0) out.push_back({s, i});
        auto [w1, r1] = divmod_field(w, s);
        auto [y1, r2] = divmod_field(z, s);
        assert(r1.zero_p() && r2.zero_p());
        w = w1;
        y = y1;
        ++i;
    }
    return out;
}

inline std::vector<std::pair<UniPoly<Rational>, int>> squarefree_decomposition_q(const UniPoly<Rational>& f) {
    return squarefree_decomposition(f, [](const UniPoly<Rational>& a, const UniPoly<Rational>& b) {
        return gcd_rational(a, b);
    });
}

/// Monic squarefree part over Q.
inline UniPoly<Rational> squarefree_part_q(const UniPoly<Rational>& f) {
    if (f.zero_p()) throw std::domain_error("squarefree part of zero");
    UniPoly<Rational> r = UniPoly<Rational>::one();
    for (const auto& [s, m] : squarefree_decomposition_q(f)) r = r * s;
    return r;
}

/// Multiplicity of the (nonconstant) factor u in p.
template <class C>
int factor_valuation(UniPoly<C> p, const UniPoly<C>& u) {
    if (p.zero_p()) throw std::domain_error("valuation in zero polynomial");
    int v = 0;
    while (true) {
        bool ok = false;
        UniPoly<C> q = exact_div(p, u, ok);
        if (!ok) return v;
        ++v;
        p = std::move(q);
    }
}

/// Resultant of a and b as the Sylvester determinant, evaluated by
/// fraction-free (Bareiss) elimination so all divisions stay in C.
template <class C>
C resultant(const UniPoly<C>& a, const UniPoly<C>& b) {
    if (a.zero_p() || b.zero_p()) return C(0);
    int n = a.degree(), m = b.degree();
    if (n == 0) {
        C r = C(1);
        for (int i = 0; i < m; ++i) r = r * a.c[0];
        return r;
    }
    if (m == 0) {
        C r = C(1);
        for (int i = 0; i < n; ++i) r = r * b.c[0];
        return r;
    }
    int N = n + m;
    std::vector<std::vector<C>> M(N, std::vector<C>(N, C(0)));
    for (int row = 0; row < m; ++row)
        for (int k = 0; k <= n; ++k) M[row][row + k] = a.c[n - k];
    for (int row = 0; row < n; ++row)
        for (int k = 0; k <= m; ++k) M[m + row][row + k] = b.c[m - k];

    bool negate = false;
    C prev = C(1);
    for (int r = 0; r < N - 1; ++r) {
        int piv = -1;
        for (int i = r; i < N; ++i)
            if (!is_zero(M[i][r])) { piv = i; break; }
        if (piv < 0) return C(0);
        if (piv != r) { std::swap(M[piv], M[r]); negate = !negate; }
        for (int i = r + 1; i < N; ++i) {
            for (int j = r + 1; j < N; ++j) {
                C t = M[r][r] * M[i][j] - M[i][r] * M[r][j];
                bool ok = false;
                M[i][j] = exact_div(t, prev, ok);
                assert(ok && "Bareiss division must be exact");
            }
            M[i][r] = C(0);
        }
        prev = M[r][r];
    }
    C det = M[N - 1][N - 1];
    return negate ? C(0) - det : det;
}

/// Canonical text form, highest degree first, e.g. "z^2 - 1/2*z + 3".
inline std::string to_string(const UniPoly<Rational>& p, const std::string& var = "z") {
    if (p.zero_p()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        Rational q = p.coeff(i);
        if (q == 0) continue;
        bool first = out.empty();
        bool neg = q < 0;
        Rational aq = neg ? Rational(-q) : q;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string mono;
        if (i == 0) {
            mono = to_string(aq);
        } else {
            if (aq != 1) mono += to_string(aq) + "*";
            mono += var;
            if (i > 1) mono += "^" + std::to_string(i);
        }
        out += mono;
    }
    return out;
}

} // namespace darboux
