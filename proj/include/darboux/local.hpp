#pragma once

#include <numeric>

#include "darboux/bipoly.hpp"
#include "darboux/elim.hpp"
#include "darboux/errors.hpp"
#include "darboux/roots.hpp"

namespace darboux {

struct CommonComponentThroughPoint : std::domain_error {
    CommonComponentThroughPoint()
        : std::domain_error("curves share a component through the point; intersection number is infinite") {}
};

template <class C>
int ord(const UniPoly<C>& p) {
    if (p.zero_p()) throw std::domain_error("order of zero polynomial");
    for (int i = 0; i <= p.degree(); ++i)
        if (!is_zero(p.c[i])) return i;
    return 0;
}

/// Local intersection multiplicity I_0(f, g) at the origin; Fulton's
/// recursive reduction on the y = 0 restrictions. Throws when a common
/// component passes through the origin.
template <class K>
Int fulton_origin(BiPolyT<K> f, BiPolyT<K> g) {
    Int total = 0;
    const BiPolyT<K> y = BiPolyT<K>::var_y();
    for (long guard = 0; guard < 2000000; ++guard) {
        if (f.zero_p() || g.zero_p()) throw CommonComponentThroughPoint();
        if (!is_zero(f.eval(K(0), K(0))) || !is_zero(g.eval(K(0), K(0)))) return total;
        UniPoly<K> p = f.restrict_y0();
        UniPoly<K> q = g.restrict_y0();
        if (p.zero_p() && q.zero_p()) throw CommonComponentThroughPoint(); // y divides both
        if (p.zero_p()) {
            bool ok = false;
            f = exact_divide(f, y, ok);
            total += ord(q);
            continue;
        }
        if (q.zero_p()) {
            bool ok = false;
            g = exact_divide(g, y, ok);
            total += ord(p);
            continue;
        }
        if (p.degree() > q.degree()) {
            std::swap(f, g);
            std::swap(p, q);
        }
        K c = q.lc() / p.lc();
        g = g - f * BiPolyT<K>::monomial(q.degree() - p.degree(), 0, c);
    }
    throw std::logic_error("fulton_origin failed to terminate");
}

/// Public intersection number at a rational point, with the common-component
/// precheck on the inputs.
inline Int intersection_number(const BiPoly& f, const BiPoly& g, const Rational& x0, const Rational& y0) {
    if (f.zero_p() || g.zero_p()) throw CommonComponentThroughPoint();
    BiPoly d = gcd_bipoly(f, g);
    if (d.degree() > 0 && d.eval(x0, y0) == 0) throw CommonComponentThroughPoint();
    return fulton_origin(f.translated(x0, y0), g.translated(x0, y0));
}

/// nu_phi(X) = I_X(f, x - x0) = ord of f(x0, y) at y = y0.
inline Int projection_multiplicity(const BiPoly& f, const Rational& x0, const Rational& y0) {
    if (f.eval(x0, y0) != 0) throw ValidationError("point is not on the curve");
    BiPoly t = f.translated(x0, y0);
    UniPoly<Rational> fiber = t.restrict_x0();
    if (fiber.zero_p()) throw ValidationError("curve contains the vertical line through the point");
    return ord(fiber);
}

namespace newton {

/// One compact edge of the lower Newton polygon, from (i0, j0) to (i1, j1)
/// with i0 < i1 and j0 > j1.
struct Edge {
    int i0, j0, i1, j1;
};

template <class K>
std::vector<Edge> lower_polygon(const BiPolyT<K>& f) {
    // minimal j per i over the support
    std::map<int, int> minj;
    for (const auto& [e, c] : f.terms) {
        auto it = minj.find(e.i);
        if (it == minj.end() || e.j < it->second) minj[e.i] = e.j;
    }
    // lower-left hull from the point on the j-axis to the first point with
    // j = 0 (both exist for the callers: x and y do not divide f)
    std::vector<std::pair<int, int>> pts(minj.begin(), minj.end());
    std::vector<std::pair<int, int>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull[hull.size() - 1];
            // keep the lower hull: drop b when it is above segment a-p
            long cross = static_cast<long>(b.first - a.first) * (p.second - a.second) -
                         static_cast<long>(b.second - a.second) * (p.first - a.first);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
        if (p.second == 0) break; // reached the x-axis
    }
    std::vector<Edge> edges;
    for (size_t i = 0; i + 1 < hull.size(); ++i) {
        if (hull[i].second <= hull[i + 1].second) break; // no longer descending
        edges.push_back({hull[i].first, hull[i].second, hull[i + 1].first, hull[i + 1].second});
    }
    return edges;
}

inline std::pair<long, long> bezout_pair(long r, long s) {
    // returns (alpha, beta) with beta*r - alpha*s = 1, gcd(r, s) = 1
    long old_r = r, rr = s, old_s = 1, ss = 0, old_t = 0, tt = 1;
    while (rr != 0) {
        long q = old_r / rr;
        std::swap(old_r -= q * rr, rr);
        std::swap(old_s -= q * ss, ss);
        std::swap(old_t -= q * tt, tt);
    }
    // old_s * r + old_t * s = old_r = gcd = 1
    // want beta*r - alpha*s = 1  ->  beta = old_s, alpha = -old_t
    return {-old_t, old_s};
}

template <class K>
K pow_signed(const K& base, long e) {
    if (e == 0) return K(1);
    K b = base;
    if (e < 0) {
        b = K(1) / base;
        e = -e;
    }
    K acc(1);
    while (e) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

struct Count {
    long branches = 0;
    bool certified = true;
    Count& operator+=(const Count& o) {
        branches += o.branches;
        certified = certified && o.certified;
        return *this;
    }
};

constexpr int kBranchDepthCap = 32;

template <class K>
Count count_branches(const BiPolyT<K>& f, int depth);

/// Root zeta0 of the edge polynomial with multiplicity >= 2: substitute
/// x = zeta0^alpha t^r, y = zeta0^beta t^s (1 + y1), divide by the
/// t-valuation, and recurse. beta*r - alpha*s = 1 keeps everything in K.
template <class K>
Count recurse_root(const BiPolyT<K>& f, const K& zeta0, long r, long s, int depth) {
    auto [alpha, beta] = bezout_pair(r, s);
    long w = -1;
    for (const auto& [e, c] : f.terms) {
        long v = r * e.i + s * e.j;
        if (w < 0 || v < w) w = v;
    }
    int max_j = f.degree_y();
    std::vector<BiPolyT<K>> one_plus_pow(max_j + 1);
    BiPolyT<K> one_plus = BiPolyT<K>::constant(K(1)) + BiPolyT<K>::var_y();
    one_plus_pow[0] = BiPolyT<K>::constant(K(1));
    for (int j = 1; j <= max_j; ++j) one_plus_pow[j] = one_plus_pow[j - 1] * one_plus;

    BiPolyT<K> g;
    for (const auto& [e, c] : f.terms) {
        long tdeg = r * e.i + s * e.j - w;
        K scale = c * pow_signed(zeta0, alpha * e.i + beta * e.j);
        g = g + one_plus_pow[e.j].scaled(scale) * BiPolyT<K>::monomial(static_cast<int>(tdeg), 0, K(1));
    }
    return count_branches(g, depth + 1);
}

template <class K>
Count count_branches(const BiPolyT<K>& f_in, int depth) {
    Count out;
    if (depth > kBranchDepthCap) {
        out.certified = false;
        return out;
    }
    BiPolyT<K> f = f_in;
    if (f.zero_p()) throw std::domain_error("branch count of zero polynomial");

    // axis components; reduced input has valuation <= 1
    int xv = kExponentCap, yv = kExponentCap;
    for (const auto& [e, c] : f.terms) {
        xv = std::min(xv, e.i);
        yv = std::min(yv, e.j);
    }
    bool ok = false;
    if (xv > 0) {
        f = exact_divide(f, BiPolyT<K>::monomial(xv, 0, K(1)), ok);
        out.branches += 1;
    }
    if (yv > 0) {
        f = exact_divide(f, BiPolyT<K>::monomial(0, yv, K(1)), ok);
        out.branches += 1;
    }
    if (!is_zero(f.eval(K(0), K(0)))) return out;
    if (f.order_at_origin() == 1) { // smooth
        out.branches += 1;
        return out;
    }

    for (const Edge& E : lower_polygon(f)) {
        long di = E.i1 - E.i0, dj = E.j0 - E.j1;
        long h = std::gcd(di, dj);
        long s = di / h, r = dj / h;
        UniPoly<K> psi; // Psi(zeta) = sum a_k zeta^(h-k)
        psi.c.assign(h + 1, K(0));
        for (long k = 0; k <= h; ++k)
            psi.c[h - k] = f.coeff(E.i0 + static_cast<int>(k * s), E.j0 - static_cast<int>(k * r));
        psi.trim();

        auto dec = squarefree_decomposition(psi, [](const UniPoly<K>& a, const UniPoly<K>& b) {
            return ring_gcd(a, b);
        });
        for (const auto& [part, mult] : dec) {
            if (mult == 1) {
                out.branches += part.degree();
                continue;
            }
            // repeated roots: recurse per root available in K (or one
            // quadratic lift when over Q)
            UniPoly<K> rest = part;
            for (const auto& [zeta0, m] : roots_in_field(part)) {
                (void)m;
                out += recurse_root(f, zeta0, r, s, depth);
                UniPoly<K> lin(std::vector<K>{K(0) - zeta0, K(1)});
                rest = divmod_field(rest, lin).first;
            }
            if (rest.degree() > 0) {
                if constexpr (std::is_same_v<K, Rational>) {
                    for (const auto& fac : factorize_q(rest).factors) {
                        if (fac.poly.degree() == 2) {
                            QuadExt z2 = quadratic_root(fac.poly);
                            BiPolyT<QuadExt> fq =
                                map_coeffs(f, [](const Rational& c) { return QuadExt(c); });
                            Count sub = recurse_root(fq, z2, r, s, depth);
                            sub.branches *= 2; // conjugate root contributes equally
                            out += sub;
                        } else {
                            // roots in a deeper extension: at least one branch
                            // per root, no certification
                            out.branches += fac.poly.degree();
                            out.certified = false;
                        }
                    }
                } else {
                    out.branches += rest.degree();
                    out.certified = false;
                }
            }
        }
    }
    return out;
}

} // namespace newton

struct BranchCount {
    long branches = 0;
    bool certified = true;
};

/// Number of local analytic branches of {f = 0} at the origin; f must
/// vanish at the origin and be squarefree.
template <class K>
BranchCount branch_count_origin(const BiPolyT<K>& f) {
    if (!is_zero(f.eval(K(0), K(0)))) throw ValidationError("point is not on the curve");
    auto c = newton::count_branches(f, 0);
    return {c.branches, c.certified};
}

inline BranchCount branch_count(const BiPoly& f, const Rational& x0, const Rational& y0) {
    return branch_count_origin(f.translated(x0, y0));
}

/// Per-point data entering the genus computation. delta_std is the
/// classical Noether delta ((f, f_y)_X - nu + r) / 2; delta_paper keeps the
/// unhalved combination (f, f_y)_X + r - nu for reporting.
struct LocalInvariants {
    Int int_ffy = 0;
    Int nu = 0;
    long branches = 0;
    bool branches_certified = true;
    bool parity_ok = true;
    Int delta_paper = 0;
    Int delta_std = 0; // meaningful only when parity_ok
};

/// Invariants at the origin in the current coordinates. Requires the curve
/// through the origin with no vertical-line component there.
template <class K>
LocalInvariants local_invariants_origin(const BiPolyT<K>& f) {
    LocalInvariants out;
    if (!is_zero(f.eval(K(0), K(0)))) throw ValidationError("point is not on the curve");
    if (f.restrict_x0().zero_p())
        throw ValidationError("curve contains the vertical line through the point");
    out.int_ffy = fulton_origin(f, f.dy());
    out.nu = ord(f.restrict_x0());
    auto bc = newton::count_branches(f, 0);
    out.branches = bc.branches;
    out.branches_certified = bc.certified;
    Int comb = out.int_ffy - out.nu + Int(out.branches);
    out.delta_paper = out.int_ffy + Int(out.branches) - out.nu;
    out.parity_ok = (comb % 2 == 0) && comb >= 0;
    if (out.parity_ok) out.delta_std = comb / 2;
    return out;
}

/// Spec-facing delta at a rational point.
inline LocalInvariants delta_invariant(const BiPoly& f, const Rational& x0, const Rational& y0) {
    return local_invariants_origin(f.translated(x0, y0));
}

} // namespace darboux
