#pragma once

#include <optional>

#include "darboux/field.hpp"

namespace darboux {

enum class Irreducibility { verified, reducible, unknown };

/// Witness that f is an algebraic partial integral: P f_x + Q f_y = k f
/// with deg k <= m - 1.
struct Certificate {
    VectorField field;
    BiPoly f;
    BiPoly k;
    int n = 0;
    bool first_integral = false;
    Irreducibility irreducibility = Irreducibility::unknown;
};

/// Rank test for lines and conics; higher degrees stay unknown.
/// Irreducibility here means absolute irreducibility (over C).
inline Irreducibility classify_irreducibility(const BiPoly& f) {
    int n = f.degree();
    if (n == 1) return Irreducibility::verified;
    if (n != 2) return Irreducibility::unknown;
    // conic a x^2 + b xy + c y^2 + d x + e y + g; reducible iff the 3x3
    // symmetric matrix is singular
    Rational a = f.coeff(2, 0), b = f.coeff(1, 1), c = f.coeff(0, 2);
    Rational d = f.coeff(1, 0), e = f.coeff(0, 1), g = f.coeff(0, 0);
    Rational half = make_rational(Int(1), Int(2));
    Rational det = a * (c * g - e * half * e * half) - b * half * (b * half * g - e * half * d * half) +
                   d * half * (b * half * e * half - c * d * half);
    return det != 0 ? Irreducibility::verified : Irreducibility::reducible;
}

/// P f_x + Q f_y divided exactly by f; nullopt when f is not invariant.
inline std::optional<Certificate> compute_cofactor(const VectorField& V, const BiPoly& f) {
    if (f.degree() < 1) throw ValidationError("curve polynomial must be nonconstant");
    BiPoly w = V.P * f.dx() + V.Q * f.dy();
    bool ok = false;
    BiPoly k = w.zero_p() ? BiPoly::zero() : exact_divide(w, f, ok);
    if (!w.zero_p() && !ok) return std::nullopt;
    if (k.degree() > V.m - 1) throw std::logic_error("cofactor degree exceeds m-1");
    Certificate c;
    c.field = V;
    c.f = f;
    c.k = k;
    c.n = f.degree();
    c.first_integral = k.zero_p();
    c.irreducibility = classify_irreducibility(f);
    return c;
}

struct VerifyResult {
    bool ok = false;
    BiPoly residual; // P f_x + Q f_y - k f, zero iff ok
};

inline VerifyResult verify_certificate(const Certificate& c) {
    VerifyResult r;
    r.residual = c.field.P * c.f.dx() + c.field.Q * c.f.dy() - c.k * c.f;
    r.ok = r.residual.zero_p();
    return r;
}

/// Highest-order cofactor term: (P_m dfn/dx + Q_m dfn/dy) / f_n when the
/// division is exact.
inline std::optional<BiPoly> leading_cofactor(const VectorField& V, const BiPoly& f_n) {
    if (f_n.zero_p() || !f_n.is_homogeneous())
        throw ValidationError("leading form must be nonzero homogeneous");
    BiPoly w = V.p_top() * f_n.dx() + V.q_top() * f_n.dy();
    if (w.zero_p()) return BiPoly::zero();
    bool ok = false;
    BiPoly k = exact_divide(w, f_n, ok);
    if (!ok) return std::nullopt;
    return k;
}

enum class VerdictStatus { holds, fails, not_applicable, uncertified };

inline const char* to_cstring(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::holds: return "holds";
        case VerdictStatus::fails: return "fails";
        case VerdictStatus::not_applicable: return "not-applicable";
        case VerdictStatus::uncertified: return "uncertified";
    }
    return "?";
}

struct Theorem1Verdict {
    VerdictStatus status = VerdictStatus::not_applicable;
    BiPoly offending; // factor of sqfree(f_n) not dividing sqfree(R), on failure
};

/// Every infinity point of {f = 0} must be a Darboux point:
/// sqfree(f_n) | sqfree(R_{m+1}).
inline Theorem1Verdict check_theorem1(const VectorField& V, const BiPoly& f) {
    if (f.degree() < 1) throw ValidationError("curve polynomial must be nonconstant");
    Theorem1Verdict out;
    BiPoly R = r_infinity(V);
    if (R.zero_p()) {
        out.status = VerdictStatus::not_applicable;
        return out;
    }
    BiPoly sff = squarefree_part_form(HomogeneousForm::of(f.homogeneous_part(f.degree())));
    BiPoly sfR = squarefree_part_form(HomogeneousForm::of(R));
    bool ok = false;
    exact_divide(sfR, sff, ok);
    if (ok) {
        out.status = VerdictStatus::holds;
    } else {
        out.status = VerdictStatus::fails;
        BiPoly g = gcd_bipoly(sff, sfR);
        bool ok2 = false;
        out.offending = exact_divide(sff, g, ok2);
        if (!ok2) throw std::logic_error("gcd must divide sqfree leading form");
    }
    return out;
}

} // namespace darboux
