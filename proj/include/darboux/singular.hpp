#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "darboux/certify.hpp"
#include "darboux/local.hpp"

namespace darboux {

/// One singular point of the projective closure, or a conjugate class of
/// them. Locations are reported in the input coordinates; invariants of
/// affine points are computed in the sheared frame recorded by the analysis.
struct SingPoint {
    enum class Loc {
        affine_rational,  // exact point (ax, ay)
        affine_quad,      // conjugate pair: x roots of min_poly (deg 2), y = y_aff0 + y_aff1 * x
        affine_yclass,    // rational x = ax, y runs over roots of min_poly (deg >= 3)
        affine_xclass,    // unresolved: x-coordinates are roots of min_poly (deg >= 3, sheared frame)
        inf_rational,     // [1 : v0], v0 = ax
        inf_quad,         // [1 : v], v root of min_poly (deg 2)
        inf_class,        // [1 : v], v root of min_poly (deg >= 3); invariants unresolved
        inf_far           // [0 : 1 : 0]
    } loc = Loc::affine_rational;

    Rational ax, ay;
    UniPoly<Rational> min_poly;
    std::optional<std::pair<Rational, Rational>> y_affine; // affine_quad: y = a + b*x
    int size = 1;            // number of points in the class
    bool count_exact = true; // size is exact (not just a lower bound)
    bool resolved = true;    // exact per-point invariants are available
    LocalInvariants inv;     // valid when resolved
    bool certified = false;  // resolved && branches certified && parity ok
    int local_shear = 0;     // extra in-chart shear used for the invariants
    std::vector<std::array<double, 4>> approx;

    std::string key() const {
        switch (loc) {
            case Loc::affine_rational: return "A(" + to_string(ax) + "," + to_string(ay) + ")";
            case Loc::affine_quad: return "Ac(" + to_string(min_poly, "x") + ")";
            case Loc::affine_yclass:
                return "Ay(" + to_string(ax) + ";" + to_string(min_poly, "y") + ")";
            case Loc::affine_xclass: return "Ax(" + to_string(min_poly, "x") + ")";
            case Loc::inf_rational: return "I[1:" + to_string(ax) + "]";
            case Loc::inf_quad:
            case Loc::inf_class: return "Ic(" + to_string(min_poly, "v") + ")";
            case Loc::inf_far: return "I[0:1:0]";
        }
        return "?";
    }
    bool at_infinity() const {
        return loc == Loc::inf_rational || loc == Loc::inf_quad || loc == Loc::inf_class ||
               loc == Loc::inf_far;
    }
};

struct SingularAnalysis {
    std::vector<SingPoint> points;
    int shear_used = 0;
    bool all_resolved = true;   // every point has exact invariants
    bool all_certified = true;  // ... and they are certified
    int count_min = 0;          // distinct singular points, lower bound
    int count_max = 0;          // upper bound (equal when exact)
    int affine_min = 0, affine_max = 0;
};

namespace detail {

/// Local invariants at the origin with an in-chart shear fallback: try
/// x -> x + tau*y until the parity check passes. delta and the branch count
/// are invariants of the germ, so any passing tau is sound.
inline std::pair<LocalInvariants, int> invariants_with_fallback_q(const BiPoly& local, int max_tau = 8) {
    for (int tau = 0; tau <= max_tau; ++tau) {
        BiPoly g = tau == 0 ? local : local.shear_x(Rational(tau));
        if (g.restrict_x0().zero_p()) continue; // vertical line component in this frame
        LocalInvariants inv = local_invariants_origin(g);
        if (inv.parity_ok) return {inv, tau};
    }
    LocalInvariants bad;
    bad.parity_ok = false;
    return {bad, -1};
}

inline std::pair<LocalInvariants, int> invariants_with_fallback_k(const BiPolyT<QuadExt>& local,
                                                                  int max_tau = 8) {
    for (int tau = 0; tau <= max_tau; ++tau) {
        BiPolyT<QuadExt> g = tau == 0 ? local : local.shear_x(QuadExt(tau));
        if (g.restrict_x0().zero_p()) continue;
        LocalInvariants inv = local_invariants_origin(g);
        if (inv.parity_ok) return {inv, tau};
    }
    LocalInvariants bad;
    bad.parity_ok = false;
    return {bad, -1};
}

/// Vertical-tangent test in the current frame: the lowest homogeneous form
/// of the translated polynomial must keep its pure y-power term.
template <class K>
bool no_vertical_tangent(const BiPolyT<K>& local) {
    int d = local.order_at_origin();
    return !is_zero(local.coeff(0, d));
}

inline UniPoly<Rational> minimal_polynomial(const QuadExt& v) {
    if (v.b == 0) return UniPoly<Rational>(std::vector<Rational>{-v.a, Rational(1)});
    // z^2 - 2a z + (a^2 - b^2 d)
    return UniPoly<Rational>(std::vector<Rational>{v.a * v.a - v.b * v.b * v.d, -2 * v.a, Rational(1)});
}

struct AffinePassResult {
    std::vector<SingPoint> points;
    bool genericity_ok = true; // false requests the next global shear
};

/// One pass over the affine singular locus of the sheared curve ft.
/// strict = demand the spec's genericity (separated x's, no vertical
/// tangents, parity at tau = 0); relaxed = accept with local fallbacks.
inline AffinePassResult affine_singular_pass(const BiPoly& ft, int t, bool strict) {
    AffinePassResult out;
    BiPoly ftx = ft.dx(), fty = ft.dy();
    UniPoly<Rational> rx = resultant_y_raw(ft, fty);
    UniPoly<Rational> r2 = resultant_y_raw(ft, ftx);
    UniPoly<Rational> r3 = resultant_y_raw(ftx, fty);
    UniPoly<Rational> cand = (rx.zero_p() || r2.zero_p()) ? (rx.zero_p() ? r2 : rx)
                                                          : gcd_rational(rx, r2);
    if (cand.zero_p()) throw std::logic_error("squarefree curve with vanishing elimination data");
    if (cand.degree() == 0) return out;

    auto attach_invariants_q = [&](SingPoint& p, const BiPoly& local) {
        if (strict) {
            if (!no_vertical_tangent(local)) return false;
            p.inv = local_invariants_origin(local);
            if (!p.inv.parity_ok) return false;
            p.resolved = true;
        } else {
            auto [inv, tau] = invariants_with_fallback_q(local);
            p.inv = inv;
            p.local_shear = std::max(tau, 0);
            p.resolved = tau >= 0;
        }
        p.certified = p.resolved && p.inv.branches_certified;
        return true;
    };
    auto attach_invariants_k = [&](SingPoint& p, const BiPolyT<QuadExt>& local) {
        if (strict) {
            if (!no_vertical_tangent(local)) return false;
            p.inv = local_invariants_origin(local);
            if (!p.inv.parity_ok) return false;
            p.resolved = true;
        } else {
            auto [inv, tau] = invariants_with_fallback_k(local);
            p.inv = inv;
            p.local_shear = std::max(tau, 0);
            p.resolved = tau >= 0;
        }
        p.certified = p.resolved && p.inv.branches_certified;
        return true;
    };

    for (const auto& fac : factorize_q(cand).factors) {
        const UniPoly<Rational>& u = fac.poly;
        if (u.degree() == 1) {
            Rational x0 = -u.coeff(0);
            UniPoly<Rational> a = ft.eval_x(x0), b = ftx.eval_x(x0), c = fty.eval_x(x0);
            UniPoly<Rational> gy = a;
            for (const auto& q : {b, c}) gy = gy.zero_p() ? q : (q.zero_p() ? gy : gcd_rational(gy, q));
            if (gy.degree() <= 0) continue; // spurious candidate
            auto yfacs = factorize_q(gy).factors;
            if (strict && yfacs.size() > 1) {
                out.genericity_ok = false; // two singular orbits share this x
                return out;
            }
            for (const auto& yf : yfacs) {
                if (yf.poly.degree() == 1) {
                    Rational y0 = -yf.poly.coeff(0);
                    SingPoint p;
                    p.loc = SingPoint::Loc::affine_rational;
                    p.ax = x0 + Rational(t) * y0; // back to input coordinates
                    p.ay = y0;
                    if (!attach_invariants_q(p, ft.translated(x0, y0))) {
                        out.genericity_ok = false;
                        return out;
                    }
                    p.approx.push_back({to_double(p.ax), 0.0, to_double(p.ay), 0.0});
                    out.points.push_back(std::move(p));
                } else if (yf.poly.degree() == 2) {
                    QuadExt y0 = quadratic_root(yf.poly);
                    QuadExt xo = QuadExt(x0) + QuadExt(Rational(t)) * y0;
                    SingPoint p;
                    p.size = 2;
                    p.min_poly = minimal_polynomial(xo);
                    if (p.min_poly.degree() == 2) {
                        p.loc = SingPoint::Loc::affine_quad;
                        // sqrt(d) = (x - xo.a)/xo.b on the class
                        p.y_affine = {y0.a - y0.b * xo.a / xo.b, y0.b / xo.b};
                    } else {
                        // shear collapsed the two x-images: describe over y
                        p.loc = SingPoint::Loc::affine_yclass;
                        p.ax = xo.a;
                        p.min_poly = minimal_polynomial(y0);
                    }
                    BiPolyT<QuadExt> fk = map_coeffs(ft, [](const Rational& cc) { return QuadExt(cc); });
                    if (!attach_invariants_k(p, fk.translated(QuadExt(x0), y0))) {
                        out.genericity_ok = false;
                        return out;
                    }
                    auto xa = approx_value(xo), ya = approx_value(y0);
                    p.approx.push_back({xa.real(), xa.imag(), ya.real(), ya.imag()});
                    p.approx.push_back({xa.real(), -xa.imag(), ya.real(), -ya.imag()});
                    out.points.push_back(std::move(p));
                } else {
                    // y-fiber of degree >= 3 over a rational x: exact count,
                    // invariants out of reach of quadratic arithmetic
                    SingPoint p;
                    p.loc = SingPoint::Loc::affine_yclass;
                    p.ax = x0; // sheared frame; original x = x0 + t*y per point
                    p.min_poly = yf.poly;
                    p.size = yf.poly.degree();
                    p.resolved = false;
                    for (const auto& yap : approx_roots(yf.poly)) {
                        double xr = to_double(x0) + t * yap.real();
                        p.approx.push_back({xr, t * yap.imag(), yap.real(), yap.imag()});
                    }
                    out.points.push_back(std::move(p));
                }
            }
        } else if (u.degree() == 2) {
            QuadExt x0 = quadratic_root(u);
            UniPoly<QuadExt> a = ft.eval_x(x0), b = ftx.eval_x(x0), c = fty.eval_x(x0);
            UniPoly<QuadExt> gy = a;
            for (const auto& q : {b, c}) gy = gy.zero_p() ? q : (q.zero_p() ? gy : gcd_field(gy, q));
            if (gy.degree() <= 0) continue;
            UniPoly<QuadExt> rep = gcd_field(gy, gy.derivative());
            UniPoly<QuadExt> sf = rep.degree() > 0 ? divmod_field(gy, rep).first : gy;
            if (sf.degree() > 1) {
                if (strict) {
                    out.genericity_ok = false; // conjugate x carries several points
                    return out;
                }
                SingPoint p;
                p.loc = SingPoint::Loc::affine_xclass;
                p.min_poly = u;
                p.size = 2 * sf.degree();
                p.resolved = false;
                out.points.push_back(std::move(p));
                continue;
            }
            QuadExt y0 = (QuadExt() - sf.coeff(0)) / sf.lc();
            QuadExt xo = x0 + QuadExt(Rational(t)) * y0;
            SingPoint p;
            p.size = 2;
            p.min_poly = minimal_polynomial(xo);
            if (p.min_poly.degree() == 2) {
                p.loc = SingPoint::Loc::affine_quad;
                if (xo.b != 0) p.y_affine = {y0.a - y0.b * xo.a / xo.b, y0.b / xo.b};
            } else {
                p.loc = SingPoint::Loc::affine_yclass;
                p.ax = xo.a;
                p.min_poly = minimal_polynomial(y0);
            }
            BiPolyT<QuadExt> fk = map_coeffs(ft, [](const Rational& cc) { return QuadExt(cc); });
            if (!attach_invariants_k(p, fk.translated(x0, y0))) {
                out.genericity_ok = false;
                return out;
            }
            auto xa = approx_value(xo), ya = approx_value(y0);
            p.approx.push_back({xa.real(), xa.imag(), ya.real(), ya.imag()});
            p.approx.push_back({xa.real(), -xa.imag(), ya.real(), -ya.imag()});
            out.points.push_back(std::move(p));
        } else {
            // x-class of degree >= 3: quadratic arithmetic cannot resolve the
            // fiber. Genuineness filter: the partials must also meet over u.
            if (!r3.zero_p() && factor_valuation(r3, u) == 0) continue;
            SingPoint p;
            p.loc = SingPoint::Loc::affine_xclass;
            p.min_poly = u;
            p.size = u.degree();
            p.count_exact = false;
            p.resolved = false;
            for (const auto& xap : approx_roots(u)) p.approx.push_back({xap.real(), xap.imag(), 0, 0});
            out.points.push_back(std::move(p));
        }
    }
    return out;
}

} // namespace detail

/// Affine + infinity singular points of the projective closure of {f = 0}.
/// Throws NonReducedCurve when f is not squarefree.
inline SingularAnalysis analyze_singular_points(const BiPoly& f, int shear_seed = 0) {
    if (f.degree() < 1) throw ValidationError("curve polynomial must be nonconstant");
    if (!is_squarefree(f)) throw NonReducedCurve("curve polynomial is not squarefree");
    const int n = f.degree();

    SingularAnalysis best;
    bool have_best = false;
    int first_monic_t = -1;
    for (int attempt = 0; attempt < 20 && !have_best; ++attempt) {
        int t = shear_seed + attempt;
        BiPoly ft = f.shear_x(Rational(t));
        if (as_poly_in_y(ft).lc().degree() != 0) continue; // y-leading coefficient must be constant
        if (first_monic_t < 0) first_monic_t = t;
        auto pass = detail::affine_singular_pass(ft, t, /*strict=*/true);
        if (!pass.genericity_ok) continue;
        best.points = std::move(pass.points);
        best.shear_used = t;
        have_best = true;
    }
    if (!have_best) {
        // relaxed pass on the first monic shear, with local fallbacks
        int t = first_monic_t >= 0 ? first_monic_t : shear_seed;
        BiPoly ft = f.shear_x(Rational(t));
        while (as_poly_in_y(ft).lc().degree() != 0) ft = f.shear_x(Rational(++t));
        auto pass = detail::affine_singular_pass(ft, t, /*strict=*/false);
        best.points = std::move(pass.points);
        best.shear_used = t;
    }

    // ---- points at infinity (input coordinates; charts) ----
    {
        const BiPoly fn = f.homogeneous_part(n);
        UniPoly<Rational> w = dehomogenize(fn);
        UniPoly<Rational> w1;
        if (n >= 1 && !f.homogeneous_part(n - 1).zero_p())
            w1 = dehomogenize(f.homogeneous_part(n - 1));
        BiPoly F = chart_clear(f, n);

        if (w.degree() >= 1) {
            UniPoly<Rational> mult = gcd_rational(w, w.derivative());
            if (mult.degree() > 0) {
                UniPoly<Rational> candv = w1.zero_p() ? mult : gcd_rational(mult, w1);
                for (const auto& fac : factorize_q(candv).factors) {
                    const UniPoly<Rational>& q = fac.poly;
                    if (q.degree() == 1) {
                        Rational v0 = -q.coeff(0);
                        SingPoint p;
                        p.loc = SingPoint::Loc::inf_rational;
                        p.ax = v0;
                        auto [inv, tau] = detail::invariants_with_fallback_q(F.translated(Rational(0), v0));
                        p.inv = inv;
                        p.local_shear = std::max(tau, 0);
                        p.resolved = tau >= 0;
                        p.certified = p.resolved && inv.branches_certified;
                        best.points.push_back(std::move(p));
                    } else if (q.degree() == 2) {
                        QuadExt v0 = quadratic_root(q);
                        BiPolyT<QuadExt> Fk = map_coeffs(F, [](const Rational& c) { return QuadExt(c); });
                        SingPoint p;
                        p.loc = SingPoint::Loc::inf_quad;
                        p.min_poly = q;
                        p.size = 2;
                        auto [inv, tau] =
                            detail::invariants_with_fallback_k(Fk.translated(QuadExt(0), v0));
                        p.inv = inv;
                        p.local_shear = std::max(tau, 0);
                        p.resolved = tau >= 0;
                        p.certified = p.resolved && inv.branches_certified;
                        best.points.push_back(std::move(p));
                    } else {
                        SingPoint p;
                        p.loc = SingPoint::Loc::inf_class;
                        p.min_poly = q;
                        p.size = q.degree();
                        p.resolved = false;
                        best.points.push_back(std::move(p));
                    }
                }
            }
        }
        // the far point [0:1:0]
        if (f.coeff(0, n) == 0) {
            BiPoly F2 = chart_clear(f.swap_xy(), n);
            if (F2.eval(Rational(0), Rational(0)) == 0 &&
                F2.dx().eval(Rational(0), Rational(0)) == 0 &&
                F2.dy().eval(Rational(0), Rational(0)) == 0) {
                SingPoint p;
                p.loc = SingPoint::Loc::inf_far;
                auto [inv, tau] = detail::invariants_with_fallback_q(F2);
                p.inv = inv;
                p.local_shear = std::max(tau, 0);
                p.resolved = tau >= 0;
                p.certified = p.resolved && inv.branches_certified;
                best.points.push_back(std::move(p));
            }
        }
    }

    std::sort(best.points.begin(), best.points.end(),
              [](const SingPoint& a, const SingPoint& b) { return a.key() < b.key(); });
    for (const auto& p : best.points) {
        best.all_resolved = best.all_resolved && p.resolved;
        best.all_certified = best.all_certified && p.certified;
        int lo = p.size, hi = p.size;
        if (!p.count_exact) {
            lo = 0;
            hi = p.size * std::max(f.degree_y(), 1);
        }
        best.count_min += lo;
        best.count_max += hi;
        if (!p.at_infinity()) {
            best.affine_min += lo;
            best.affine_max += hi;
        }
    }
    return best;
}

/// Report of the genus computation via Noether's formula with the classical
/// delta.
struct GenusReport {
    int n = 0;
    SingularAnalysis analysis;
    bool genus_certified = false;
    Int genus = 0;        // valid when genus_certified
    bool branches_known = false;
    Int sum_branches = 0; // sum of |pi^{-1}(X)| over Sing(C)
    Int delta_sum = 0;
};

inline GenusReport genus_report(const BiPoly& f, int shear_seed = 0) {
    GenusReport out;
    out.n = f.degree();
    out.analysis = analyze_singular_points(f, shear_seed);
    out.genus_certified = out.analysis.all_certified;
    out.branches_known = out.analysis.all_resolved;
    for (const auto& p : out.analysis.points) {
        if (p.resolved) {
            out.delta_sum += Int(p.size) * p.inv.delta_std;
            out.sum_branches += Int(p.size) * Int(p.inv.branches);
        }
    }
    if (out.genus_certified)
        out.genus = Int(out.n - 1) * Int(out.n - 2) / 2 - out.delta_sum;
    return out;
}

/// Theorem-5 style bound: 2g - 2 <= n(m-1) - sum of branch counts.
struct GenusBoundVerdict {
    VerdictStatus status = VerdictStatus::uncertified;
    Int lhs = 0, rhs = 0;
    GenusReport report;
};

inline GenusBoundVerdict genus_bound_check(const Certificate& cert, int shear_seed = 0) {
    GenusBoundVerdict out;
    out.report = genus_report(cert.f, shear_seed);
    if (!out.report.genus_certified) {
        out.status = VerdictStatus::uncertified;
        return out;
    }
    out.lhs = 2 * out.report.genus - 2;
    out.rhs = Int(cert.n) * Int(cert.field.m - 1) - out.report.sum_branches;
    out.status = out.lhs <= out.rhs ? VerdictStatus::holds : VerdictStatus::fails;
    return out;
}

// ---------------------------------------------------------------------------
// Infinity classification (V1 / V2 / V3)
// ---------------------------------------------------------------------------

struct InfinityClassEntry {
    bool far = false;     // [0:1:0]
    bool rational = true; // v0 exact vs conjugate class
    Rational v0;
    UniPoly<Rational> min_poly;
    int class_size = 1;
    int multiplicity = 1; // n_i in f_n(1,v) (the x-valuation of f_n for far)
    int cls = 1;          // 1, 2 or 3
    std::string key() const {
        if (far) return "far";
        return rational ? ("v=" + to_string(v0)) : ("class " + to_string(min_poly, "v"));
    }
};

struct InfinityClassification {
    std::vector<InfinityClassEntry> entries;
    int r = 0;     // simple points
    int sum_m = 0; // over V2
    int sum_l = 0; // over V3
    bool identity_ok = false; // r + sum_m + sum_l = n
};

inline InfinityClassification classify_infinity(const BiPoly& f) {
    if (f.degree() < 1) throw ValidationError("curve polynomial must be nonconstant");
    const int n = f.degree();
    InfinityClassification out;
    BiPoly fn = f.homogeneous_part(n);
    BiPoly fn1 = n >= 1 ? f.homogeneous_part(n - 1) : BiPoly::zero();
    UniPoly<Rational> w = dehomogenize(fn);
    UniPoly<Rational> w1 = fn1.zero_p() ? UniPoly<Rational>() : dehomogenize(fn1);

    if (w.degree() >= 1) {
        for (const auto& fac : factorize_q(w).factors) {
            InfinityClassEntry e;
            e.multiplicity = fac.multiplicity;
            if (fac.poly.degree() == 1) {
                e.rational = true;
                e.v0 = -fac.poly.coeff(0);
            } else {
                e.rational = false;
                e.min_poly = fac.poly;
                e.class_size = fac.poly.degree();
            }
            if (fac.multiplicity == 1) {
                e.cls = 1;
                out.r += e.class_size;
            } else {
                // V2 iff dF/du(0, v0) = f_{n-1}(1, v0) != 0
                bool fu_zero;
                if (w1.zero_p())
                    fu_zero = true;
                else if (fac.poly.degree() == 1)
                    fu_zero = (w1.eval<Rational>(-fac.poly.coeff(0)) == 0);
                else
                    fu_zero = gcd_rational(fac.poly, w1).degree() > 0;
                e.cls = fu_zero ? 3 : 2;
                (fu_zero ? out.sum_l : out.sum_m) += e.class_size * e.multiplicity;
            }
            out.entries.push_back(std::move(e));
        }
    }
    int a = x_valuation(fn);
    if (a >= 1) { // the far point [0:1:0] lies on the curve
        InfinityClassEntry e;
        e.far = true;
        e.multiplicity = a;
        if (a == 1) {
            e.cls = 1;
            out.r += 1;
        } else {
            // in the swapped chart dF2/du(0,0) = coeff of y^(n-1) in f_{n-1}
            bool fu_zero = fn1.coeff(0, n - 1) == 0;
            e.cls = fu_zero ? 3 : 2;
            (fu_zero ? out.sum_l : out.sum_m) += a;
        }
        out.entries.push_back(std::move(e));
    }
    std::sort(out.entries.begin(), out.entries.end(),
              [](const InfinityClassEntry& a_, const InfinityClassEntry& b_) {
                  return a_.key() < b_.key();
              });
    out.identity_ok = (out.r + out.sum_m + out.sum_l == n);
    if (!out.identity_ok) throw std::logic_error("infinity classification does not sum to n");
    return out;
}

// ---------------------------------------------------------------------------
// Ramification report for smooth curves
// ---------------------------------------------------------------------------

struct CurveNotSmooth : ValidationError {
    CurveNotSmooth() : ValidationError("ramification report requires a smooth projective curve") {}
};

struct RamificationReport {
    int n = 0;
    Int genus = 0;
    int shear_used = 0;
    Int deg_r2 = 0;            // finite branching, via res_y(f, f_y)
    Int deg_r1 = 0;            // (2g - 2 + 2n) - deg_r2
    bool lemma1_holds = false; // deg_r1 <= n - 1
    bool lemma3_holds = false; // deg_r2 <= m n (needs the field)
    std::optional<Int> lemma3_rhs;
};

inline RamificationReport ramification_report(const BiPoly& f, const VectorField* V = nullptr,
                                              int shear_seed = 0) {
    SingularAnalysis an = analyze_singular_points(f, shear_seed);
    if (!an.points.empty()) throw CurveNotSmooth();
    RamificationReport out;
    out.n = f.degree();
    out.genus = Int(out.n - 1) * Int(out.n - 2) / 2;

    // The x-projection is part of the statement: keep the input frame when
    // the y-leading coefficient is already constant (then the degree of the
    // eliminant counts the finite branching exactly); otherwise shear.
    int t = shear_seed;
    BiPoly ft = f;
    if (as_poly_in_y(f).lc().degree() > 0) {
        ft = f.shear_x(Rational(t));
        while (ft.coeff(0, out.n) == 0) ft = f.shear_x(Rational(++t));
    } else {
        t = 0;
    }
    out.shear_used = t;
    UniPoly<Rational> res = resultant_y_raw(ft, ft.dy());
    out.deg_r2 = res.zero_p() ? Int(0) : Int(res.degree());
    out.deg_r1 = (2 * out.genus - 2 + 2 * Int(out.n)) - out.deg_r2;
    out.lemma1_holds = out.deg_r1 <= Int(out.n - 1);
    if (V) {
        out.lemma3_rhs = Int(V->m) * Int(out.n);
        out.lemma3_holds = out.deg_r2 <= *out.lemma3_rhs;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Singular-point count bounds
// ---------------------------------------------------------------------------

struct SingCountVerdict {
    int affine_min = 0, affine_max = 0;
    int total_min = 0, total_max = 0;
    Int bound_affine;               // m^2
    std::optional<Int> bound_total; // m^2 + m + 1, when R != 0
    Rational bound_lemma4;          // m^2 + n/2
    VerdictStatus affine_status = VerdictStatus::holds;
    VerdictStatus total_status = VerdictStatus::not_applicable;
    VerdictStatus lemma4_status = VerdictStatus::holds;
};

inline SingCountVerdict sing_count_check(const BiPoly& f, const VectorField& V, int shear_seed = 0) {
    SingularAnalysis an = analyze_singular_points(f, shear_seed);
    SingCountVerdict out;
    out.affine_min = an.affine_min;
    out.affine_max = an.affine_max;
    out.total_min = an.count_min;
    out.total_max = an.count_max;
    Int m(V.m);
    out.bound_affine = m * m;
    out.bound_lemma4 = Rational(m * m) + make_rational(Int(f.degree()), Int(2));

    auto verdict = [](int lo, int hi, const Rational& bound) {
        if (Rational(hi) <= bound) return VerdictStatus::holds;
        if (Rational(lo) > bound) return VerdictStatus::fails;
        return VerdictStatus::uncertified;
    };
    out.affine_status = verdict(out.affine_min, out.affine_max, Rational(out.bound_affine));
    out.lemma4_status = verdict(out.total_min, out.total_max, out.bound_lemma4);
    if (!r_infinity(V).zero_p()) {
        out.bound_total = m * m + m + 1;
        out.total_status = verdict(out.total_min, out.total_max, Rational(*out.bound_total));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Theorem 4: singular points of an invariant curve are equilibria
// ---------------------------------------------------------------------------

struct Theorem4Verdict {
    VerdictStatus status = VerdictStatus::holds;
    std::vector<std::string> violations;
    int points_checked = 0;
    int points_necessary_only = 0; // classes verified by divisibility only
};

inline Theorem4Verdict check_theorem4(const Certificate& cert, int shear_seed = 0) {
    SingularAnalysis an = analyze_singular_points(cert.f, shear_seed);
    const VectorField& V = cert.field;
    Theorem4Verdict out;
    for (const auto& p : an.points) {
        if (p.at_infinity()) continue; // the theorem concerns affine singular points
        ++out.points_checked;
        if (p.loc == SingPoint::Loc::affine_rational) {
            if (V.P.eval(p.ax, p.ay) != 0 || V.Q.eval(p.ax, p.ay) != 0) {
                out.status = VerdictStatus::fails;
                out.violations.push_back(p.key());
            }
        } else if (p.loc == SingPoint::Loc::affine_quad && p.y_affine) {
            QuadExt x0 = quadratic_root(p.min_poly);
            QuadExt y0 = QuadExt(p.y_affine->first) + QuadExt(p.y_affine->second) * x0;
            if (!V.P.eval(x0, y0).is_zero() || !V.Q.eval(x0, y0).is_zero()) {
                out.status = VerdictStatus::fails;
                out.violations.push_back(p.key());
            }
        } else if (p.loc == SingPoint::Loc::affine_yclass && p.resolved) {
            // rational x with quadratic y class
            QuadExt y0 = quadratic_root(p.min_poly);
            QuadExt x0(p.ax);
            if (!V.P.eval(x0, y0).is_zero() || !V.Q.eval(x0, y0).is_zero()) {
                out.status = VerdictStatus::fails;
                out.violations.push_back(p.key());
            }
        } else {
            // unresolved class: necessary condition only, the class's defining
            // polynomial must divide the matching eliminant of (P, Q)
            ++out.points_necessary_only;
            bool okdiv = false;
            if (p.loc == SingPoint::Loc::affine_yclass) {
                UniPoly<Rational> ry = resultant_x_raw(V.P, V.Q);
                okdiv = !ry.zero_p() && factor_valuation(ry, p.min_poly) >= 1;
            } else {
                UniPoly<Rational> rx = resultant_y_raw(V.P, V.Q);
                okdiv = !rx.zero_p() && factor_valuation(rx, p.min_poly) >= 1;
            }
            if (!okdiv) {
                out.status = VerdictStatus::fails;
                out.violations.push_back(p.key());
            }
        }
    }
    if (out.status == VerdictStatus::holds && out.points_necessary_only > 0)
        out.status = VerdictStatus::uncertified;
    return out;
}

} // namespace darboux
