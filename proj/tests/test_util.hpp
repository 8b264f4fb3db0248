#pragma once

#include <cstdint>

#include "darboux/bipoly.hpp"

namespace darboux::testutil {

/// Small deterministic PRNG (splitmix64); identical sequences on every
/// platform, unlike <random> distributions.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [0, n)
    uint64_t below(uint64_t n) { return next() % n; }
    // uniform in [lo, hi]
    long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1))); }
};

inline Rational random_rational(Rng& rng, long max_abs = 9, bool allow_fraction = false) {
    long n = rng.range(-max_abs, max_abs);
    long d = allow_fraction ? rng.range(1, 4) : 1;
    return make_rational(Int(n), Int(d));
}

/// Random bivariate polynomial of total degree <= max_deg.
inline BiPoly random_bipoly(Rng& rng, int max_deg, long coeff_max = 5, bool allow_fraction = false) {
    BiPoly f;
    for (int i = 0; i <= max_deg; ++i)
        for (int j = 0; i + j <= max_deg; ++j)
            if (rng.below(100) < 55) f.add_term(Exp{i, j}, random_rational(rng, coeff_max, allow_fraction));
    return f;
}

inline BiPoly random_nonzero_bipoly(Rng& rng, int max_deg, long coeff_max = 5) {
    while (true) {
        BiPoly f = random_bipoly(rng, max_deg, coeff_max);
        if (!f.zero_p()) return f;
    }
}

inline UniPoly<Rational> random_unipoly(Rng& rng, int max_deg, long coeff_max = 9) {
    UniPoly<Rational> f;
    for (int i = 0; i <= max_deg; ++i) f.c.push_back(Rational(rng.range(-coeff_max, coeff_max)));
    f.trim();
    return f;
}

} // namespace darboux::testutil
