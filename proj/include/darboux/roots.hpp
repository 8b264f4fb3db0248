#pragma once

#include <algorithm>
#include <complex>
#include <vector>

#include "darboux/factorq.hpp"
#include "darboux/poly1.hpp"

namespace darboux {

/// The positive-sqrt root of a monic irreducible quadratic z^2 + b z + c:
/// (-b + sqrt(d)) / 2 with d = b^2 - 4c.
inline QuadExt quadratic_root(const UniPoly<Rational>& u) {
    if (u.degree() != 2) throw std::domain_error("quadratic_root expects degree 2");
    Rational b = u.coeff(1) / u.coeff(2), c = u.coeff(0) / u.coeff(2);
    Rational d = b * b - 4 * c;
    if (rational_sqrt(d)) throw std::domain_error("quadratic is reducible over Q");
    return QuadExt(-b / 2, make_rational(Int(1), Int(2)), d);
}

/// Roots lying in the base field, with multiplicities.
inline std::vector<std::pair<Rational, int>> roots_in_field(const UniPoly<Rational>& f) {
    return rational_roots(f);
}

/// Roots of f in Q(sqrt(d)), with multiplicities, found through the norm
/// polynomial N = f * conj(f) over Q. d must match the coefficients' field.
inline std::vector<std::pair<QuadExt, int>> roots_in_field(const UniPoly<QuadExt>& f) {
    std::vector<std::pair<QuadExt, int>> out;
    if (f.zero_p() || f.degree() == 0) return out;
    Rational d = 0;
    for (const auto& c : f.c)
        if (c.b != 0) { d = c.d; break; }

    UniPoly<Rational> norm_poly;
    if (d == 0) {
        norm_poly = map_coeffs(f, [](const QuadExt& c) { return c.a; });
    } else {
        UniPoly<QuadExt> fbar = map_coeffs(f, [](const QuadExt& c) { return c.conj(); });
        UniPoly<QuadExt> prod = f * fbar;
        norm_poly = map_coeffs(prod, [](const QuadExt& c) {
            if (c.b != 0) throw std::logic_error("norm polynomial must be rational");
            return c.a;
        });
    }

    auto multiplicity_of = [&](const QuadExt& r) {
        UniPoly<QuadExt> lin(std::vector<QuadExt>{QuadExt() - r, QuadExt(1)});
        UniPoly<QuadExt> g = f;
        int m = 0;
        while (true) {
            auto [q, rem] = divmod_field(g, lin);
            if (!rem.zero_p()) break;
            ++m;
            g = q;
        }
        return m;
    };

    for (const auto& fac : factorize_q(norm_poly).factors) {
        if (fac.poly.degree() == 1) {
            QuadExt r(-fac.poly.coeff(0));
            int m = multiplicity_of(r);
            if (m > 0) out.push_back({r, m});
        } else if (fac.poly.degree() == 2 && d != 0) {
            // the quadratic's roots lie in Q(sqrt(d)) iff disc = s^2 * d
            Rational b = fac.poly.coeff(1), c0 = fac.poly.coeff(0);
            Rational disc = b * b - 4 * c0;
            if (disc == 0) continue; // not possible for an irreducible factor
            auto ratio = rational_sqrt(disc / d);
            if (!ratio) continue;
            // roots (-b +- s*sqrt(d)) / 2
            for (int sign : {+1, -1}) {
                QuadExt r(-b / 2, *ratio * sign / 2, d);
                int m = multiplicity_of(r);
                if (m > 0) out.push_back({r, m});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& p, const auto& q) {
        if (p.first.a != q.first.a) return p.first.a < q.first.a;
        return p.first.b < q.first.b;
    });
    return out;
}

/// Deterministic Durand-Kerner root approximation (non-certified).
inline std::vector<std::complex<double>> approx_roots(const UniPoly<Rational>& f) {
    int n = f.degree();
    std::vector<std::complex<double>> roots;
    if (n <= 0) return roots;
    std::vector<std::complex<double>> c(n + 1);
    for (int i = 0; i <= n; ++i) c[i] = to_double(f.coeff(i));
    for (int i = 0; i <= n; ++i) c[i] /= std::abs(c[n]);

    auto eval = [&](std::complex<double> x) {
        std::complex<double> acc = 0;
        for (int i = n; i >= 0; --i) acc = acc * x + c[i];
        return acc;
    };

    roots.resize(n);
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> p(1.0, 0.0);
    for (int i = 0; i < n; ++i) {
        p *= seed;
        roots[i] = p;
    }
    for (int iter = 0; iter < 400; ++iter) {
        double shift = 0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> denom(1.0, 0.0);
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= roots[i] - roots[j];
            std::complex<double> delta = eval(roots[i]) / (c[n] / std::abs(c[n])) / denom;
            roots[i] -= delta;
            shift = std::max(shift, std::abs(delta));
        }
        if (shift < 1e-14) break;
    }
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

inline double approx_value(const Rational& q) { return to_double(q); }
inline std::complex<double> approx_value(const QuadExt& v) {
    double dd = to_double(v.d);
    if (dd >= 0) return {to_double(v.a) + to_double(v.b) * std::sqrt(dd), 0.0};
    return {to_double(v.a), to_double(v.b) * std::sqrt(-dd)};
}

} // namespace darboux
