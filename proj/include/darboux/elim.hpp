#pragma once

#include <iostream>
#include <vector>

#include "darboux/bipoly.hpp"
#include "darboux/factorq.hpp"
#include "darboux/poly1.hpp"

namespace darboux {

constexpr unsigned kCoeffBitsSoftLimit = 100000;

inline void warn_coefficient_growth(unsigned bits) {
    static bool warned = false;
    if (!warned) {
        warned = true;
        std::cerr << "warning: coefficient size " << bits
                  << " bits exceeds the soft limit of " << kCoeffBitsSoftLimit << " bits\n";
    }
}

inline unsigned max_coeff_bits(const BiPoly& f) {
    unsigned m = 0;
    for (const auto& [e, c] : f.terms) m = std::max(m, bit_size(c));
    return m;
}

/// gcd in K[x,y], normalized so the graded-lex leading coefficient is 1.
template <class K>
BiPolyT<K> gcd_bipoly(const BiPolyT<K>& f, const BiPolyT<K>& g) {
    if (f.zero_p() && g.zero_p()) throw std::domain_error("gcd(0, 0) is undefined");
    if (f.zero_p()) return g.monic_glex();
    if (g.zero_p()) return f.monic_glex();
    if constexpr (std::is_same_v<K, Rational>) {
        unsigned bits = std::max(max_coeff_bits(f), max_coeff_bits(g));
        if (bits > kCoeffBitsSoftLimit) warn_coefficient_growth(bits);
    }
    if (f.degree_y() == 0 && g.degree_y() == 0) {
        UniPoly<K> u = ring_gcd(f.restrict_y0(), g.restrict_y0());
        return from_unipoly_x(u).monic_glex();
    }
    UniPoly<UniPoly<K>> F = as_poly_in_y(f), G = as_poly_in_y(g);
    UniPoly<UniPoly<K>> W = gcd_subresultant(F, G);
    return from_poly_in_y(W).monic_glex();
}

/// Resultant with respect to y, as a univariate polynomial in x. No degree
/// check: constants are handled by the Sylvester convention.
template <class K>
UniPoly<K> resultant_y_raw(const BiPolyT<K>& f, const BiPolyT<K>& g) {
    if constexpr (std::is_same_v<K, Rational>) {
        unsigned bits = std::max(max_coeff_bits(f), max_coeff_bits(g));
        if (bits > kCoeffBitsSoftLimit) warn_coefficient_growth(bits);
    }
    return resultant(as_poly_in_y(f), as_poly_in_y(g));
}

struct DegenerateResultant : std::domain_error {
    using std::domain_error::domain_error;
};

/// The spec-facing resultant: both arguments must have positive y-degree.
template <class K>
UniPoly<K> resultant_y(const BiPolyT<K>& f, const BiPolyT<K>& g) {
    if (f.degree_y() <= 0 || g.degree_y() <= 0)
        throw DegenerateResultant("resultant_y needs positive y-degree in both arguments");
    return resultant_y_raw(f, g);
}

template <class K>
UniPoly<K> resultant_x_raw(const BiPolyT<K>& f, const BiPolyT<K>& g) {
    return resultant_y_raw(f.swap_xy(), g.swap_xy());
}

/// Squarefree test for a bivariate polynomial over Q (char 0):
/// f is squarefree iff gcd(f, f_x, f_y) is constant.
template <class K>
bool is_squarefree(const BiPolyT<K>& f) {
    if (f.zero_p()) return false;
    if (f.degree() == 0) return true;
    BiPolyT<K> g = f.dx().zero_p() ? gcd_bipoly(f, f.dy())
                 : f.dy().zero_p() ? gcd_bipoly(f, f.dx())
                                   : gcd_bipoly(gcd_bipoly(f, f.dx()), f.dy());
    return g.degree() == 0;
}

/// Product of the distinct irreducible factors of f over Q (monic glex).
template <class K>
BiPolyT<K> squarefree_part_bipoly(const BiPolyT<K>& f) {
    if (f.zero_p()) throw std::domain_error("squarefree part of zero");
    if (f.degree() == 0) return BiPolyT<K>(K(1));
    BiPolyT<K> g = f.dx().zero_p() ? gcd_bipoly(f, f.dy())
                 : f.dy().zero_p() ? gcd_bipoly(f, f.dx())
                                   : gcd_bipoly(gcd_bipoly(f, f.dx()), f.dy());
    bool ok = false;
    BiPolyT<K> r = exact_divide(f, g, ok);
    if (!ok) throw std::logic_error("squarefree part: gcd must divide");
    return r.monic_glex();
}

/// A homogeneous form together with its degree.
struct HomogeneousForm {
    BiPoly poly;
    int degree = -1;

    static HomogeneousForm of(const BiPoly& p) {
        if (!p.is_homogeneous()) throw std::domain_error("polynomial is not homogeneous");
        return {p, p.degree()};
    }
};

/// x-adic valuation of a homogeneous form (largest a with x^a | h).
inline int x_valuation(const BiPoly& h) {
    if (h.zero_p()) throw std::domain_error("valuation of zero");
    int a = kExponentCap;
    for (const auto& [e, c] : h.terms) a = std::min(a, e.i);
    return a;
}

/// Dehomogenize h(x, y) (after removing x^a) to w(z) = h(1, z).
inline UniPoly<Rational> dehomogenize(const BiPoly& h) {
    UniPoly<Rational> w;
    for (const auto& [e, c] : h.terms) {
        if (static_cast<int>(w.c.size()) <= e.j) w.c.resize(e.j + 1, Rational(0));
        w.c[e.j] = w.c[e.j] + c;
    }
    w.trim();
    return w;
}

/// Rehomogenize a univariate w(z) to the binary form of degree d >= deg w:
/// sum w_j x^(d-j) y^j.
inline BiPoly homogenize_form(const UniPoly<Rational>& w, int d) {
    BiPoly h;
    for (int j = 0; j <= w.degree(); ++j)
        if (w.coeff(j) != 0) h.terms.emplace(Exp{d - j, j}, w.coeff(j));
    return h;
}

/// Squarefree part of a nonzero homogeneous form: same projective zero set,
/// all multiplicities 1, normalized glex-monic.
inline BiPoly squarefree_part_form(const HomogeneousForm& h) {
    if (h.poly.zero_p()) throw std::domain_error("squarefree part of zero form");
    if (h.degree == 0) return BiPoly(Rational(1));
    int a = x_valuation(h.poly);
    bool ok = false;
    BiPoly rest = exact_divide(h.poly, BiPoly::monomial(a, 0, Rational(1)), ok);
    UniPoly<Rational> w = dehomogenize(rest);
    BiPoly out;
    if (w.degree() == 0) {
        out = BiPoly(Rational(1));
    } else {
        UniPoly<Rational> sf = squarefree_part_q(w);
        out = homogenize_form(sf, sf.degree());
    }
    if (a > 0) out = out * BiPoly::var_x();
    return out.monic_glex();
}

struct LinearFactor {
    BiPoly form;   // a*x + b*y, first nonzero coefficient 1
    int multiplicity = 0;
};

struct LinearFactorization {
    std::vector<LinearFactor> factors;
    BiPoly remainder; // carries the constant; no rational linear factor remains
};

/// Extract all rational linear factors of a nonzero homogeneous form.
/// factors x multiplicities, times remainder, reproduces h exactly.
inline LinearFactorization factor_linear_rational(const HomogeneousForm& h) {
    if (h.poly.zero_p()) throw std::domain_error("factor_linear_rational of zero");
    LinearFactorization out;
    int a = x_valuation(h.poly);
    BiPoly rest = h.poly;
    bool ok = false;
    if (a > 0) {
        out.factors.push_back({BiPoly::var_x(), a});
        rest = exact_divide(rest, BiPoly::monomial(a, 0, Rational(1)), ok);
    }
    if (rest.degree() == 0) {
        out.remainder = rest;
        return out;
    }
    UniPoly<Rational> w = dehomogenize(rest);
    QFactorization qf = factorize_q(w);
    for (const auto& fac : qf.factors) {
        if (fac.poly.degree() != 1) continue;
        Rational root = -fac.poly.coeff(0);
        BiPoly form;
        if (root == 0) {
            form = BiPoly::var_y();
        } else {
            // vanishes at [1 : root]; normalized with x-coefficient 1
            form = BiPoly::var_x() - BiPoly::var_y().scaled(Rational(1) / root);
        }
        out.factors.push_back({form, fac.multiplicity});
    }
    out.remainder = rest;
    for (const auto& lf : out.factors) {
        if (lf.form == BiPoly::var_x()) continue; // already divided out
        for (int k = 0; k < lf.multiplicity; ++k) {
            out.remainder = exact_divide(out.remainder, lf.form, ok);
            if (!ok) throw std::logic_error("linear factor does not divide the form");
        }
    }
    return out;
}

} // namespace darboux
