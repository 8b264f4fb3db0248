#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "darboux/poly1.hpp"

namespace darboux {

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x] for word-sized primes. Used only by the univariate
// factorization; coefficients are kept in [0, p).
// ---------------------------------------------------------------------------
namespace modp {

using Poly = std::vector<uint64_t>; // c[i] multiplies x^i, no trailing zeros

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
inline int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline uint64_t add(uint64_t a, uint64_t b, uint64_t p) { uint64_t s = a + b; return s >= p ? s - p : s; }
inline uint64_t sub(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }
inline uint64_t mul(uint64_t a, uint64_t b, uint64_t p) { return (a * b) % p; } // p < 2^31

inline uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}
inline uint64_t inv(uint64_t a, uint64_t p) { return powmod(a % p, p - 2, p); }

inline Poly mulp(const Poly& a, const Poly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], mul(a[i], b[j], p), p);
    }
    trim(r);
    return r;
}

inline Poly subp(const Poly& a, const Poly& b, uint64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i], p);
    trim(r);
    return r;
}

inline Poly scale(const Poly& a, uint64_t s, uint64_t p) {
    Poly r = a;
    for (auto& x : r) x = mul(x, s, p);
    trim(r);
    return r;
}

inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, uint64_t p) {
    if (b.empty()) throw std::domain_error("mod-p division by zero");
    Poly r = a, q;
    if (deg(a) >= deg(b)) q.assign(deg(a) - deg(b) + 1, 0);
    uint64_t bi = inv(b.back(), p);
    while (deg(r) >= deg(b)) {
        uint64_t t = mul(r.back(), bi, p);
        int sh = deg(r) - deg(b);
        q[sh] = t;
        for (size_t i = 0; i < b.size(); ++i) r[sh + i] = sub(r[sh + i], mul(t, b[i], p), p);
        trim(r);
    }
    trim(q);
    return {q, r};
}

inline Poly gcdp(Poly a, Poly b, uint64_t p) {
    while (!b.empty()) {
        Poly r = divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) a = scale(a, inv(a.back(), p), p); // monic
    return a;
}

inline Poly derivp(const Poly& a, uint64_t p) {
    Poly r;
    if (a.size() <= 1) return r;
    r.resize(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], i % p, p);
    trim(r);
    return r;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& f, uint64_t p) {
    return divmod(mulp(a, b, p), f, p).second;
}

inline Poly xpow_mod(uint64_t e, const Poly& f, uint64_t p) {
    Poly r{1}, base{0, 1};
    base = divmod(base, f, p).second;
    while (e) {
        if (e & 1) r = mulmod(r, base, f, p);
        base = mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
inline std::tuple<Poly, Poly, Poly> xgcd(Poly a, Poly b, uint64_t p) {
    Poly s0{1}, s1{}, t0{}, t1{1};
    while (!b.empty()) {
        auto [q, r] = divmod(a, b, p);
        Poly s2 = subp(s0, mulp(q, s1, p), p);
        Poly t2 = subp(t0, mulp(q, t1, p), p);
        a = std::move(b);
        b = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (!a.empty()) {
        uint64_t ai = inv(a.back(), p);
        a = scale(a, ai, p);
        s0 = scale(s0, ai, p);
        t0 = scale(t0, ai, p);
    }
    return {a, s0, t0};
}

/// Berlekamp factorization of a monic squarefree f mod p into monic
/// irreducible factors. Deterministic.
inline std::vector<Poly> berlekamp(const Poly& f, uint64_t p) {
    int n = deg(f);
    if (n <= 1) return {f};
    // Q columns: x^(p*i) mod f
    Poly xp = xpow_mod(p, f, p);
    std::vector<std::vector<uint64_t>> Q(n, std::vector<uint64_t>(n, 0));
    Poly w{1};
    for (int i = 0; i < n; ++i) {
        for (int r = 0; r < static_cast<int>(w.size()); ++r) Q[r][i] = w[r];
        if (i + 1 < n) w = mulmod(w, xp, f, p);
    }
    // A = Q - I; kernel basis
    for (int i = 0; i < n; ++i) Q[i][i] = sub(Q[i][i], 1, p);
    std::vector<int> pivot_col(n, -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int prow = -1;
        for (int r = rank; r < n; ++r)
            if (Q[r][col]) { prow = r; break; }
        if (prow < 0) continue;
        std::swap(Q[prow], Q[rank]);
        uint64_t piv = inv(Q[rank][col], p);
        for (int c = 0; c < n; ++c) Q[rank][c] = mul(Q[rank][c], piv, p);
        for (int r = 0; r < n; ++r) {
            if (r == rank || !Q[r][col]) continue;
            uint64_t t = Q[r][col];
            for (int c = 0; c < n; ++c) Q[r][c] = sub(Q[r][c], mul(t, Q[rank][c], p), p);
        }
        pivot_col[rank] = col;
        ++rank;
    }
    std::vector<Poly> basis;
    std::vector<bool> is_pivot(n, false);
    for (int r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
    for (int col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        Poly v(n, 0);
        v[col] = 1;
        for (int r = 0; r < rank; ++r) v[pivot_col[r]] = sub(0, Q[r][col], p);
        trim(v);
        basis.push_back(std::move(v));
    }
    size_t nfactors = basis.size(); // includes the all-ones vector
    std::vector<Poly> factors{f};
    for (const Poly& v : basis) {
        if (factors.size() >= nfactors) break;
        if (deg(v) <= 0) continue; // constant vector splits nothing
        std::vector<Poly> next;
        for (const Poly& u : factors) {
            if (deg(u) <= 1) { next.push_back(u); continue; }
            Poly rest = u;
            for (uint64_t c = 0; c < p && deg(rest) > 0; ++c) {
                Poly vc = v;
                if (vc.empty()) vc.push_back(0);
                vc[0] = sub(vc[0], c, p);
                trim(vc);
                Poly g = gcdp(rest, vc, p);
                if (deg(g) > 0 && deg(g) < deg(rest)) {
                    next.push_back(g);
                    rest = divmod(rest, g, p).first;
                }
            }
            if (deg(rest) > 0) next.push_back(rest);
        }
        factors = std::move(next);
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

} // namespace modp

// ---------------------------------------------------------------------------
// Hensel lifting over Z/m with m a prime power (cpp_int modulus).
// ---------------------------------------------------------------------------
namespace hensel {

using ZPoly = UniPoly<Int>;

inline Int mod_reduce(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}
inline ZPoly reduce(const ZPoly& a, const Int& m) {
    return map_coeffs(a, [&](const Int& c) { return mod_reduce(c, m); });
}
inline ZPoly symmetric(const ZPoly& a, const Int& m) {
    return map_coeffs(a, [&](const Int& c) {
        Int r = mod_reduce(c, m);
        return r * 2 > m ? Int(r - m) : r;
    });
}

/// Division with remainder mod m; the divisor must be monic.
inline std::pair<ZPoly, ZPoly> divmod_monic(const ZPoly& a, const ZPoly& b, const Int& m) {
    if (b.zero_p() || b.lc() != 1) throw std::domain_error("divmod_monic needs a monic divisor");
    ZPoly r = a, q;
    if (a.degree() >= b.degree()) q.c.assign(a.degree() - b.degree() + 1, Int(0));
    while (!r.zero_p() && r.degree() >= b.degree()) {
        Int t = r.lc();
        int sh = r.degree() - b.degree();
        q.c[sh] = t;
        r = reduce(r - b.scaled(t).shifted(sh), m);
    }
    q.trim();
    return {reduce(q, m), r};
}

struct LiftedPair {
    ZPoly g, h, s, t;
};

/// One quadratic Hensel step: from f = g*h, s*g + t*h = 1 (mod m) to the
/// same congruences mod m^2. f, g, h monic.
inline LiftedPair step(const ZPoly& f, const LiftedPair& in, const Int& m) {
    Int m2 = m * m;
    ZPoly e = reduce(f - in.g * in.h, m2);
    auto [q, r] = divmod_monic(reduce(in.s * e, m2), in.h, m2);
    ZPoly g = reduce(in.g + in.t * e + q * in.g, m2);
    ZPoly h = reduce(in.h + r, m2);
    ZPoly b = reduce(in.s * g + in.t * h - ZPoly::one(), m2);
    auto [c, d] = divmod_monic(reduce(in.s * b, m2), h, m2);
    ZPoly s = reduce(in.s - d, m2);
    ZPoly t = reduce(in.t - in.t * b - c * g, m2);
    return {g, h, s, t};
}

} // namespace hensel

// ---------------------------------------------------------------------------
// Factorization over Q.
// ---------------------------------------------------------------------------

struct QFactor {
    UniPoly<Rational> poly; // monic irreducible
    int multiplicity = 1;
};

struct QFactorization {
    Rational unit;                // f = unit * prod poly^multiplicity
    std::vector<QFactor> factors; // sorted by (degree, coefficient order)
};

namespace detail {

inline std::vector<uint64_t> small_primes(size_t count) {
    std::vector<uint64_t> out;
    uint64_t n = 3;
    while (out.size() < count) {
        bool prime = true;
        for (uint64_t d = 3; d * d <= n; d += 2)
            if (n % d == 0) { prime = false; break; }
        if (prime) out.push_back(n);
        n += 2;
    }
    return out;
}

inline modp::Poly to_modp(const UniPoly<Int>& f, uint64_t p) {
    modp::Poly r(f.c.size(), 0);
    for (size_t i = 0; i < f.c.size(); ++i) {
        Int v = hensel::mod_reduce(f.c[i], Int(p));
        r[i] = v.template convert_to<uint64_t>();
    }
    modp::trim(r);
    return r;
}

inline UniPoly<Int> from_modp(const modp::Poly& f) {
    UniPoly<Int> r;
    r.c.reserve(f.size());
    for (uint64_t c : f) r.c.push_back(Int(c));
    r.trim();
    return r;
}

/// Lift the factorization f = prod(fs) from mod p to mod M (>= target) by
/// peeling one factor at a time. f monic squarefree mod p.
inline std::vector<UniPoly<Int>> hensel_multi(const UniPoly<Int>& f, std::vector<modp::Poly> fs,
                                              uint64_t p, const Int& target, Int& modulus_out) {
    // final modulus: p^(2^k) >= target
    Int M(p);
    while (M < target) M = M * M;
    modulus_out = M;

    std::vector<UniPoly<Int>> out;
    UniPoly<Int> rem = hensel::reduce(f, M); // current monic product of the factors not yet peeled
    while (fs.size() > 1) {
        modp::Poly g0 = fs.front();
        modp::Poly h0{1};
        for (size_t i = 1; i < fs.size(); ++i) h0 = modp::mulp(h0, fs[i], p);
        auto [gg, ss, tt] = modp::xgcd(g0, h0, p);
        if (modp::deg(gg) != 0) throw std::logic_error("hensel: factors not coprime mod p");
        hensel::LiftedPair pr{from_modp(g0), from_modp(h0), from_modp(ss), from_modp(tt)};
        Int m(p);
        while (m < M) {
            pr = hensel::step(rem, pr, m);
            m = m * m;
        }
        out.push_back(hensel::reduce(pr.g, M));
        rem = hensel::reduce(pr.h, M);
        fs.erase(fs.begin());
    }
    out.push_back(rem);
    return out;
}

/// Factor a monic squarefree integer polynomial into monic irreducible
/// integer factors (Zassenhaus).
inline std::vector<UniPoly<Int>> factor_monic_squarefree_z(const UniPoly<Int>& f) {
    int n = f.degree();
    if (n <= 1) return {f};

    static const std::vector<uint64_t> primes = small_primes(200);
    uint64_t p = 0;
    modp::Poly fp;
    for (uint64_t cand : primes) {
        fp = to_modp(f, cand);
        if (modp::deg(fp) != n) continue; // lc divisible (impossible: monic) — kept for safety
        modp::Poly g = modp::gcdp(fp, modp::derivp(fp, cand), cand);
        if (modp::deg(g) == 0) { p = cand; break; }
    }
    if (p == 0) throw std::logic_error("no suitable prime found for factorization");

    std::vector<modp::Poly> fs = modp::berlekamp(fp, p);
    if (fs.size() == 1) return {f};

    // Mignotte-style bound on coefficients of any monic factor, doubled for
    // the symmetric representation.
    Int maxc = 0;
    for (const Int& c : f.c) maxc = std::max(maxc, Int(boost::multiprecision::abs(c)));
    Int bound = (isqrt_floor(Int(n + 1)) + 1) * boost::multiprecision::pow(Int(2), n) * maxc;
    Int target = 2 * bound + 1;

    Int M;
    std::vector<UniPoly<Int>> lifted = hensel_multi(f, fs, p, target, M);

    // subset recombination
    std::vector<UniPoly<Int>> result;
    std::vector<UniPoly<Int>> active = lifted;
    UniPoly<Int> remaining = f;
    size_t s = 1;
    while (2 * s <= active.size()) {
        // iterate s-subsets of active in lexicographic index order
        std::vector<size_t> idx(s);
        std::iota(idx.begin(), idx.end(), 0);
        bool found = false;
        while (true) {
            UniPoly<Int> cand = UniPoly<Int>::one();
            for (size_t i : idx) cand = hensel::reduce(cand * active[i], M);
            cand = hensel::symmetric(cand, M);
            bool ok = false;
            UniPoly<Int> quo = exact_div(remaining, cand, ok);
            if (ok) {
                result.push_back(cand);
                remaining = quo;
                std::vector<UniPoly<Int>> next;
                for (size_t i = 0; i < active.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end()) next.push_back(active[i]);
                active = std::move(next);
                found = true;
                break;
            }
            // next combination
            int k = static_cast<int>(s) - 1;
            while (k >= 0 && idx[k] == active.size() - s + k) --k;
            if (k < 0) break;
            ++idx[k];
            for (size_t j = k + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (remaining.degree() > 0) result.push_back(remaining);
    return result;
}

inline bool coeff_less(const UniPoly<Rational>& a, const UniPoly<Rational>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        const Rational ca = a.coeff(i), cb = b.coeff(i);
        if (ca != cb) return ca < cb;
    }
    return false;
}

} // namespace detail

/// Complete factorization over Q into monic irreducible factors.
inline QFactorization factorize_q(const UniPoly<Rational>& f) {
    if (f.zero_p()) throw std::domain_error("factorization of the zero polynomial");
    QFactorization out;
    out.unit = f.lc();
    if (f.degree() == 0) return out;

    for (const auto& [part, mult] : squarefree_decomposition_q(f)) {
        // monic rational -> primitive integer -> monic integer transform
        UniPoly<Int> zp = clear_denominators(part);
        Int L = zp.lc();
        int n = zp.degree();
        UniPoly<Int> monic;
        monic.c.assign(n + 1, Int(0));
        for (int i = 0; i <= n; ++i)
            monic.c[i] = zp.c[i] * boost::multiprecision::pow(L, n - 1 - i >= 0 ? n - 1 - i : 0);
        if (n >= 1) {
            // G(x) = L^(n-1) * zp(x/L); the i-th coefficient is zp_i * L^(n-1-i),
            // which for i = n gives L^(n-1) * L / L^... = 1 after the loop above
            // handles i < n; fix the leading coefficient explicitly.
            monic.c[n] = 1;
        }
        std::vector<UniPoly<Int>> zfactors = detail::factor_monic_squarefree_z(monic);
        for (const auto& H : zfactors) {
            // map back: h(x) = H(L*x) / L^deg(H), monic over Q
            int d = H.degree();
            UniPoly<Rational> h;
            h.c.assign(d + 1, Rational(0));
            for (int i = 0; i <= d; ++i)
                h.c[i] = Rational(H.c[i]) * make_rational(boost::multiprecision::pow(L, i), boost::multiprecision::pow(L, d));
            h.trim();
            out.factors.push_back({h, mult});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const QFactor& a, const QFactor& b) { return detail::coeff_less(a.poly, b.poly); });
    return out;
}

/// Rational roots with multiplicities, from the degree-1 factors.
inline std::vector<std::pair<Rational, int>> rational_roots(const UniPoly<Rational>& f) {
    std::vector<std::pair<Rational, int>> out;
    for (const auto& fac : factorize_q(f).factors)
        if (fac.poly.degree() == 1) out.push_back({-fac.poly.coeff(0), fac.multiplicity});
    return out;
}

} // namespace darboux
