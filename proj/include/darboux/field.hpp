#pragma once

#include <array>
#include <optional>
#include <vector>

#include "darboux/bipoly.hpp"
#include "darboux/elim.hpp"
#include "darboux/errors.hpp"
#include "darboux/roots.hpp"

namespace darboux {

/// The plane polynomial system x' = P, y' = Q of degree m > 1 with P, Q
/// coprime.
struct VectorField {
    BiPoly P;
    BiPoly Q;
    int m = 0;

    BiPoly p_top() const { return P.homogeneous_part(m); }
    BiPoly q_top() const { return Q.homogeneous_part(m); }
};

inline VectorField make_field(const BiPoly& P, const BiPoly& Q) {
    if (P.zero_p() && Q.zero_p()) throw DegreeTooLow("P and Q are both zero");
    int m = std::max(P.degree(), Q.degree());
    if (m <= 1) throw DegreeTooLow("system degree m = " + std::to_string(m) + " (need m > 1)");
    BiPoly g = gcd_bipoly(P.zero_p() ? Q : P, Q.zero_p() ? P : Q);
    if (g.degree() > 0) throw CommonFactor(to_string(g));
    return VectorField{P, Q, m};
}

/// R_{m+1} = x*Q_m - y*P_m; identically zero marks a dicritical infinity.
inline BiPoly r_infinity(const VectorField& V) {
    return BiPoly::var_x() * V.q_top() - BiPoly::var_y() * V.p_top();
}

/// A point of the projective line at infinity, either exact rational
/// [x0 : y0] (first nonzero coordinate 1) or a conjugate class given by an
/// irreducible q(z) with the point [1 : z].
struct ProjectivePoint {
    bool rational = true;
    Rational x, y;               // valid when rational
    UniPoly<Rational> min_poly;  // irreducible monic, valid when !rational
    int class_size = 1;
    int multiplicity = 1;
    std::vector<std::complex<double>> approx; // slopes y/x; non-certified

    std::string key() const {
        if (rational) return "[" + to_string(x) + ":" + to_string(y) + "]";
        return "[1:z], z root of " + to_string(min_poly, "z");
    }
};

struct DarbouxDivisor {
    std::vector<ProjectivePoint> points;
    int total = 0; // sum of multiplicity * class_size = m + 1
};

/// The m+1 projective zeros of R_{m+1} with multiplicities.
inline DarbouxDivisor darboux_divisor(const VectorField& V) {
    BiPoly R = r_infinity(V);
    if (R.zero_p()) throw DicriticalInfinity();
    DarbouxDivisor out;
    int a = x_valuation(R);
    if (a > 0) {
        ProjectivePoint p;
        p.rational = true;
        p.x = 0;
        p.y = 1;
        p.multiplicity = a;
        out.points.push_back(std::move(p));
    }
    bool ok = false;
    BiPoly rest = exact_divide(R, BiPoly::monomial(a, 0, Rational(1)), ok);
    UniPoly<Rational> w = dehomogenize(rest);
    if (w.degree() > 0) {
        for (const auto& fac : factorize_q(w).factors) {
            ProjectivePoint p;
            p.multiplicity = fac.multiplicity;
            if (fac.poly.degree() == 1) {
                p.rational = true;
                p.x = 1;
                p.y = -fac.poly.coeff(0);
            } else {
                p.rational = false;
                p.min_poly = fac.poly;
                p.class_size = fac.poly.degree();
                p.approx = approx_roots(fac.poly);
            }
            out.points.push_back(std::move(p));
        }
    }
    std::sort(out.points.begin(), out.points.end(),
              [](const ProjectivePoint& p, const ProjectivePoint& q) { return p.key() < q.key(); });
    for (const auto& p : out.points) out.total += p.multiplicity * p.class_size;
    if (out.total != V.m + 1) throw std::logic_error("Darboux divisor does not sum to m+1");
    return out;
}

/// The chart at infinity u = 1/x, v = y/x with the induced field scaled by
/// u^(m-1): A du + B dv; F and K transport a curve and its cofactor.
struct InfinityChart {
    BiPoly A; // -u^(m+1) P(1/u, v/u)
    BiPoly B; // u^m (Q - v P)(1/u, v/u)
    std::optional<BiPoly> F; // u^n f(1/u, v/u)
    std::optional<BiPoly> K; // u^(m-1) k(1/u, v/u) - n u^m P(1/u, v/u)
};

inline InfinityChart infinity_chart(const VectorField& V,
                                    const std::optional<BiPoly>& f = std::nullopt,
                                    const std::optional<BiPoly>& k = std::nullopt) {
    InfinityChart out;
    out.A = -chart_clear(V.P, V.m + 1);
    out.B = chart_clear(V.Q, V.m) - BiPoly::var_y() * chart_clear(V.P, V.m);
    if (f) {
        int n = f->degree();
        out.F = chart_clear(*f, n);
        if (k) out.K = chart_clear(*k, V.m - 1) - chart_clear(V.P, V.m).scaled(Rational(n));
    }
    return out;
}

/// One conjugate class of finite equilibria (or a single rational point
/// when x_poly and y data are linear).
struct EquilibriumClass {
    UniPoly<Rational> x_poly; // irreducible monic, x-coordinates of the class
    // Exactly one of the following descriptions applies:
    std::optional<Rational> x_value;                    // rational x
    std::optional<UniPoly<Rational>> y_poly;            // irreducible min poly of y over Q
    std::optional<std::pair<Rational, Rational>> y_affine; // y = first + second * x on the class
    int size = 1;       // number of points
    bool certified = true;
    std::vector<std::complex<double>> approx_x;
    std::vector<std::array<double, 4>> approx; // re x, im x, re y, im y (when y is resolved)

    std::string key() const {
        std::string s = to_string(x_poly, "x") + "|";
        if (y_poly) s += to_string(*y_poly, "y");
        if (y_affine) s += to_string(y_affine->first) + "+" + to_string(y_affine->second) + "x";
        return s;
    }
};

struct Equilibria {
    std::vector<EquilibriumClass> classes; // sorted by key
    std::vector<std::pair<Rational, Rational>> rational_points;
    int count_min = 0;  // certified lower bound on distinct equilibria
    int count_max = 0;  // upper bound
    bool exact = true;  // count_min == count_max and all classes certified
};

namespace detail {

inline void approx_pair(EquilibriumClass& cls) {
    auto xs = cls.x_poly.degree() >= 1 ? approx_roots(cls.x_poly) : std::vector<std::complex<double>>{};
    if (cls.x_value) xs = {std::complex<double>(to_double(*cls.x_value), 0.0)};
    cls.approx_x = xs;
    for (const auto& x : xs) {
        if (cls.y_affine) {
            std::complex<double> y = to_double(cls.y_affine->first) + to_double(cls.y_affine->second) * x;
            cls.approx.push_back({x.real(), x.imag(), y.real(), y.imag()});
        } else if (cls.y_poly) {
            for (const auto& y : approx_roots(*cls.y_poly))
                cls.approx.push_back({x.real(), x.imag(), y.real(), y.imag()});
        }
    }
}

} // namespace detail

/// All common zeros of P and Q in the affine plane. Rational points exact;
/// conjugate classes resolved exactly through linear or quadratic x-classes,
/// flagged uncertified beyond that.
inline Equilibria finite_equilibria(const VectorField& V) {
    Equilibria out;
    // Pure-x / pure-y systems have no common zeros at all (P, Q coprime).
    if (V.P.degree_y() == 0 && V.Q.degree_y() == 0) {
        UniPoly<Rational> g = gcd_rational(V.P.restrict_y0(), V.Q.restrict_y0());
        if (g.degree() > 0) throw std::logic_error("coprime P,Q cannot share x-roots");
        return out;
    }
    UniPoly<Rational> rx = resultant_y_raw(V.P, V.Q);
    if (rx.zero_p()) throw std::logic_error("resultant vanished for a coprime pair");
    if (rx.degree() == 0) return out;

    UniPoly<Rational> lcp = as_poly_in_y(V.P).zero_p() ? UniPoly<Rational>() : as_poly_in_y(V.P).lc();
    UniPoly<Rational> lcq = as_poly_in_y(V.Q).zero_p() ? UniPoly<Rational>() : as_poly_in_y(V.Q).lc();

    for (const auto& fac : factorize_q(rx).factors) {
        const UniPoly<Rational>& u = fac.poly;
        if (u.degree() == 1) {
            Rational x0 = -u.coeff(0);
            UniPoly<Rational> py = V.P.eval_x(x0), qy = V.Q.eval_x(x0);
            UniPoly<Rational> gy = (py.zero_p() || qy.zero_p()) ? (py.zero_p() ? qy : py)
                                                                : gcd_rational(py, qy);
            if (gy.degree() <= 0) continue; // spurious resultant root
            for (const auto& yf : factorize_q(gy).factors) {
                EquilibriumClass cls;
                cls.x_poly = u;
                cls.x_value = x0;
                if (yf.poly.degree() == 1) {
                    Rational y0 = -yf.poly.coeff(0);
                    out.rational_points.push_back({x0, y0});
                    continue;
                }
                cls.y_poly = yf.poly;
                cls.size = yf.poly.degree();
                detail::approx_pair(cls);
                out.classes.push_back(std::move(cls));
            }
        } else if (u.degree() == 2) {
            QuadExt x0 = quadratic_root(u);
            UniPoly<QuadExt> py = V.P.eval_x(x0), qy = V.Q.eval_x(x0);
            UniPoly<QuadExt> gy = (py.zero_p() || qy.zero_p()) ? (py.zero_p() ? qy : py)
                                                               : gcd_field(py, qy);
            if (gy.degree() <= 0) continue;
            // reduce to distinct fiber points
            UniPoly<QuadExt> rep = gcd_field(gy, gy.derivative());
            if (rep.degree() > 0) gy = divmod_field(gy, rep).first;
            auto roots = roots_in_field(gy);
            int covered = 0;
            for (const auto& [y0, mult] : roots) {
                EquilibriumClass cls;
                cls.x_poly = u;
                // y = a + b*x via sqrt(d) = 2x + u1 (u monic: x^2 + u1 x + u0)
                Rational u1 = u.coeff(1);
                cls.y_affine = {y0.a + y0.b * u1, y0.b * 2};
                cls.size = 2;
                detail::approx_pair(cls);
                out.classes.push_back(std::move(cls));
                ++covered;
            }
            if (covered < gy.degree()) {
                // deeper conjugate points above a quadratic x-class
                EquilibriumClass cls;
                cls.x_poly = u;
                cls.size = 2 * (gy.degree() - covered);
                cls.certified = false;
                detail::approx_pair(cls);
                out.classes.push_back(std::move(cls));
                out.exact = false;
            }
        } else {
            EquilibriumClass cls;
            cls.x_poly = u;
            cls.certified = false;
            bool lc_both_vanish = !lcp.zero_p() && !lcq.zero_p() &&
                                  factor_valuation(lcp, u) > 0 && factor_valuation(lcq, u) > 0;
            int mult_in_res = factor_valuation(rx, u);
            cls.size = lc_both_vanish ? 0 : u.degree(); // lower bound per x-root: one point
            out.count_max += u.degree() * mult_in_res - cls.size; // extra slack beyond size
            detail::approx_pair(cls);
            out.classes.push_back(std::move(cls));
            out.exact = false;
        }
    }
    std::sort(out.classes.begin(), out.classes.end(),
              [](const EquilibriumClass& a, const EquilibriumClass& b) { return a.key() < b.key(); });
    std::sort(out.rational_points.begin(), out.rational_points.end());

    for (const auto& [x0, y0] : out.rational_points) {
        if (V.P.eval(x0, y0) != 0 || V.Q.eval(x0, y0) != 0)
            throw std::logic_error("equilibrium point fails to annihilate P, Q");
    }
    out.count_min = static_cast<int>(out.rational_points.size());
    for (const auto& c : out.classes) out.count_min += c.certified ? c.size : (c.size > 0 ? c.size : 0);
    out.count_max += out.count_min;
    return out;
}

} // namespace darboux
