#pragma once

#include <map>
#include <optional>
#include <vector>

#include "darboux/certify.hpp"
#include "darboux/linsolve.hpp"

namespace darboux {

struct BoundRule {
    enum class Kind { smooth, nodal, k_bounded, explicit_n } kind = Kind::smooth;
    int value = 0; // K for k_bounded, n for explicit_n

    static BoundRule smooth() { return {Kind::smooth, 0}; }
    static BoundRule nodal() { return {Kind::nodal, 0}; }
    static BoundRule k_bounded(int k) { return {Kind::k_bounded, k}; }
    static BoundRule explicit_n(int n) { return {Kind::explicit_n, n}; }

    std::string name() const {
        switch (kind) {
            case Kind::smooth: return "smooth";
            case Kind::nodal: return "nodal";
            case Kind::k_bounded: return "k:" + std::to_string(value);
            case Kind::explicit_n: return "explicit:" + std::to_string(value);
        }
        return "?";
    }
};

/// Degree cap for the search: smooth curves are capped at m+1, nodal at
/// 2(m+1); the K-rule evaluates
/// floor((4+2m+K+sqrt((4+2m+K)^2+16Km^2))/4) exactly.
inline int degree_bound(const VectorField& V, const BoundRule& rule) {
    switch (rule.kind) {
        case BoundRule::Kind::smooth: return V.m + 1;
        case BoundRule::Kind::nodal: return 2 * (V.m + 1);
        case BoundRule::Kind::explicit_n:
            if (rule.value < 1) throw ValidationError("explicit degree bound must be >= 1");
            return rule.value;
        case BoundRule::Kind::k_bounded: {
            if (rule.value < 1) throw ValidationError("K must be >= 1");
            Int K(rule.value), m(V.m);
            Int a = 4 + 2 * m + K;
            Int b = a * a + 16 * K * m * m;
            // largest n with 4n <= a or (4n - a)^2 <= b
            Int nstar = (a + isqrt_floor(b)) / 4;
            while (true) {
                Int q = 4 * (nstar + 1) - a;
                if (q <= 0 || q * q <= b)
                    ++nstar;
                else
                    break;
            }
            return static_cast<int>(nstar.template convert_to<long>());
        }
    }
    throw std::logic_error("unknown bound rule");
}

/// A candidate leading form: product of rational linear factors of R_{m+1}.
struct LeadingForm {
    BiPoly form; // the product, degree n
    std::vector<std::pair<BiPoly, int>> partition;
    bool complete = true; // R's rational factors span all of its roots
};

struct LeadingFormSet {
    std::vector<LeadingForm> forms;
    bool complete = true;
};

inline LeadingFormSet enumerate_leading_forms(const VectorField& V, int n) {
    if (n < 1) throw ValidationError("leading-form degree must be >= 1");
    BiPoly R = r_infinity(V);
    if (R.zero_p()) throw DicriticalInfinity();
    LeadingFormSet out;
    auto lf = factor_linear_rational(HomogeneousForm::of(R));
    out.complete = lf.remainder.degree() == 0;

    std::vector<BiPoly> factors;
    for (const auto& fc : lf.factors) factors.push_back(fc.form);
    std::sort(factors.begin(), factors.end(),
              [](const BiPoly& a, const BiPoly& b) { return to_string(a) < to_string(b); });
    if (factors.empty()) return out;

    // multiplicity vectors summing to n, lexicographically from (n,0,...,0)
    size_t k = factors.size();
    std::vector<int> mult(k, 0);
    mult[0] = n;
    while (true) {
        LeadingForm cur;
        cur.form = BiPoly(Rational(1));
        cur.complete = out.complete;
        for (size_t i = 0; i < k; ++i) {
            if (mult[i] > 0) {
                cur.partition.push_back({factors[i], mult[i]});
                cur.form = cur.form * factors[i].pow(mult[i]);
            }
        }
        out.forms.push_back(std::move(cur));
        // next composition in descending lexicographic order
        int idx = static_cast<int>(k) - 2;
        while (idx >= 0 && mult[idx] == 0) --idx;
        if (idx < 0) break;
        --mult[idx];
        int tail = 0;
        for (size_t j = idx + 1; j < k; ++j) {
            tail += mult[j];
            mult[j] = 0;
        }
        mult[idx + 1] = tail + 1;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Descending-degree solver
// ---------------------------------------------------------------------------

namespace stair {

/// Expression of total degree <= 2 in parameter variables. Slot expressions
/// stay affine throughout; only assembled equation components acquire
/// quadratic terms (products of two affine slots), which the iterative
/// elimination below must dissolve.
struct QuadExpr {
    Rational c0;
    std::map<int, Rational> lin;
    std::map<std::pair<int, int>, Rational> quad; // key (u <= v)

    bool affine() const { return quad.empty(); }
    bool constant() const { return lin.empty() && quad.empty(); }
    bool zero() const { return constant() && c0 == 0; }

    void add_scaled(const QuadExpr& o, const Rational& s) {
        if (s == 0) return;
        c0 += o.c0 * s;
        for (const auto& [v, c] : o.lin) {
            Rational& slot = lin[v];
            slot += c * s;
            if (slot == 0) lin.erase(v);
        }
        for (const auto& [k, c] : o.quad) {
            Rational& slot = quad[k];
            slot += c * s;
            if (slot == 0) quad.erase(k);
        }
    }

    /// Product of two affine expressions.
    static QuadExpr product(const QuadExpr& a, const QuadExpr& b) {
        if (!a.affine() || !b.affine())
            throw std::logic_error("staircase: product of non-affine expressions");
        QuadExpr r;
        r.c0 = a.c0 * b.c0;
        for (const auto& [v, c] : b.lin) {
            if (a.c0 != 0) r.lin[v] = c * a.c0;
        }
        for (const auto& [v, c] : a.lin) {
            Rational& slot = r.lin[v];
            slot += c * b.c0;
            if (slot == 0) r.lin.erase(v);
        }
        for (const auto& [u, cu] : a.lin)
            for (const auto& [v, cv] : b.lin) {
                auto key = u <= v ? std::make_pair(u, v) : std::make_pair(v, u);
                Rational& slot = r.quad[key];
                slot += cu * cv;
                if (slot == 0) r.quad.erase(key);
            }
        return r;
    }

    /// Substitute affine expressions for variables.
    QuadExpr substituted(const std::map<int, QuadExpr>& subs) const {
        QuadExpr r;
        r.c0 = c0;
        auto lookup = [&](int v) {
            auto it = subs.find(v);
            if (it != subs.end()) return it->second;
            QuadExpr e;
            e.lin[v] = 1;
            return e;
        };
        for (const auto& [v, c] : lin) r.add_scaled(lookup(v), c);
        for (const auto& [k, c] : quad) r.add_scaled(product(lookup(k.first), lookup(k.second)), c);
        return r;
    }
};

} // namespace stair

/// Affine family of certificates sharing a leading form: representative plus
/// basis directions of the solution space.
struct CertificateFamily {
    Certificate representative;
    int dimension = 0;
    std::vector<std::pair<BiPoly, BiPoly>> directions; // (df, dk)
};

struct SolveOutcome {
    bool skipped = false;    // leading cofactor division failed
    bool obstructed = false; // parameter interaction beyond rational branching
    std::vector<CertificateFamily> families;
};

namespace stair {

/// Mutable elimination state: the affine expressions of every introduced
/// coefficient over the currently free parameters, plus equations whose
/// quadratic part has not dissolved yet.
struct State {
    std::map<std::pair<int, int>, QuadExpr> fslots, kslots;
    std::vector<int> free_vars;
    std::vector<QuadExpr> pending;
    int next_var = 0;

    void substitute(const std::map<int, QuadExpr>& subs) {
        for (auto& [key, e] : fslots) e = e.substituted(subs);
        for (auto& [key, e] : kslots) e = e.substituted(subs);
        for (auto& e : pending) e = e.substituted(subs);
    }
};

/// Solve the affine members of eqs over the free variables, substitute, and
/// repeat while quadratic members keep collapsing. Unresolved quadratics are
/// parked in state.pending. Returns false on inconsistency.
inline bool eliminate(State& st, std::vector<QuadExpr> eqs) {
    eqs.insert(eqs.end(), st.pending.begin(), st.pending.end());
    st.pending.clear();
    std::vector<int> vars = st.free_vars;
    std::sort(vars.begin(), vars.end());
    while (true) {
        std::vector<QuadExpr> affine_eqs, rest;
        for (auto& e : eqs) {
            if (e.zero()) continue;
            if (e.constant()) return false;
            if (e.affine())
                affine_eqs.push_back(std::move(e));
            else
                rest.push_back(std::move(e));
        }
        if (affine_eqs.empty()) {
            st.pending = std::move(rest);
            st.free_vars = vars;
            return true;
        }
        std::map<int, size_t> col_of;
        for (size_t c = 0; c < vars.size(); ++c) col_of[vars[c]] = c;
        std::vector<std::vector<Rational>> rows;
        std::vector<Rational> rhs;
        for (const auto& e : affine_eqs) {
            std::vector<Rational> row(vars.size(), Rational(0));
            for (const auto& [v, c] : e.lin) row[col_of.at(v)] = c;
            rows.push_back(std::move(row));
            rhs.push_back(-e.c0);
        }
        LinearSolution sol = solve_linear(rows, rhs);
        if (!sol.consistent) return false;
        size_t nfree = sol.nullspace.size();
        std::vector<int> new_params;
        for (size_t kk = 0; kk < nfree; ++kk) new_params.push_back(st.next_var++);
        std::map<int, QuadExpr> subs;
        for (size_t c = 0; c < vars.size(); ++c) {
            QuadExpr e;
            e.c0 = sol.particular[c];
            for (size_t kk = 0; kk < nfree; ++kk)
                if (sol.nullspace[kk][c] != 0) e.lin[new_params[kk]] = sol.nullspace[kk][c];
            subs[vars[c]] = std::move(e);
        }
        st.substitute(subs);
        for (auto& e : rest) e = e.substituted(subs);
        vars = new_params;
        eqs = std::move(rest);
        if (eqs.empty()) {
            st.free_vars = vars;
            return true;
        }
    }
}

} // namespace stair

/// Fix f_n and k_{m-1} per the leading-form equation, then march the
/// homogeneous components of P f_x + Q f_y - k f = 0 downward. Each step is
/// linear in the unknowns it introduces; free parameters carry along as an
/// affine family. Leftover quadratic relations among parameters are resolved
/// by branching on their rational roots when they involve a single
/// parameter; anything beyond that is reported as obstructed.
inline SolveOutcome solve_from_leading_form(const VectorField& V, const BiPoly& f_n) {
    using stair::QuadExpr;
    using stair::State;
    SolveOutcome out;
    const int n = f_n.degree();
    const int m = V.m;
    auto kappa = leading_cofactor(V, f_n);
    if (!kappa) {
        out.skipped = true;
        return out;
    }

    auto pparts = homogeneous_parts(V.P);
    auto qparts = homogeneous_parts(V.Q);
    auto part = [](const std::vector<BiPoly>& ps, int d) {
        return (d >= 0 && d < static_cast<int>(ps.size())) ? ps[d] : BiPoly::zero();
    };

    State st;
    auto fcoef = [&](const State& s, int i, int a, int b) -> QuadExpr {
        QuadExpr e;
        if (i == n) {
            e.c0 = f_n.coeff(a, b);
            return e;
        }
        auto it = s.fslots.find({i, a});
        if (it == s.fslots.end()) return e;
        return it->second;
    };
    auto kcoef = [&](const State& s, int l, int a, int b) -> QuadExpr {
        QuadExpr e;
        if (l == m - 1) {
            e.c0 = kappa->coeff(a, b);
            return e;
        }
        auto it = s.kslots.find({l, a});
        if (it == s.kslots.end()) return e;
        return it->second;
    };

    bool alive = true;
    for (int d = n + m - 2; d >= 0 && alive; --d) {
        // introduce this step's unknowns
        std::vector<int> new_vars;
        int fi = d - m + 1;
        if (fi >= 0 && fi <= n - 1) {
            for (int a = 0; a <= fi; ++a) {
                QuadExpr e;
                e.lin[st.next_var] = 1;
                new_vars.push_back(st.next_var++);
                st.fslots[{fi, a}] = std::move(e);
            }
        }
        int kl = d - n;
        if (kl >= 0 && kl <= m - 2) {
            for (int a = 0; a <= kl; ++a) {
                QuadExpr e;
                e.lin[st.next_var] = 1;
                new_vars.push_back(st.next_var++);
                st.kslots[{kl, a}] = std::move(e);
            }
        }
        st.free_vars.insert(st.free_vars.end(), new_vars.begin(), new_vars.end());

        // assemble the degree-d component of P f_x + Q f_y - k f
        std::map<std::pair<int, int>, QuadExpr> comp;
        for (int e_ = 0; e_ <= m; ++e_) {
            int i = d - e_ + 1;
            if (i < 1 || i > n) continue;
            const BiPoly& Pe = part(pparts, e_);
            const BiPoly& Qe = part(qparts, e_);
            for (const auto& [pe, pc] : Pe.terms) {
                for (int a = 1; a <= i; ++a) {
                    int b = i - a;
                    QuadExpr c = fcoef(st, i, a, b);
                    if (c.zero()) continue;
                    comp[{pe.i + a - 1, pe.j + b}].add_scaled(c, pc * Rational(a));
                }
            }
            for (const auto& [qe, qc] : Qe.terms) {
                for (int a = 0; a <= i; ++a) {
                    int b = i - a;
                    if (b < 1) continue;
                    QuadExpr c = fcoef(st, i, a, b);
                    if (c.zero()) continue;
                    comp[{qe.i + a, qe.j + b - 1}].add_scaled(c, qc * Rational(b));
                }
            }
        }
        for (int l = 0; l <= m - 1; ++l) {
            int i = d - l;
            if (i < 0 || i > n) continue;
            for (int ak = 0; ak <= l; ++ak) {
                QuadExpr ck = kcoef(st, l, ak, l - ak);
                if (ck.zero()) continue;
                for (int af = 0; af <= i; ++af) {
                    QuadExpr cf = fcoef(st, i, af, i - af);
                    if (cf.zero()) continue;
                    comp[{ak + af, (l - ak) + (i - af)}].add_scaled(QuadExpr::product(ck, cf),
                                                                    Rational(-1));
                }
            }
        }

        std::vector<QuadExpr> eqs;
        for (auto& [mono, expr] : comp) eqs.push_back(std::move(expr));
        alive = stair::eliminate(st, std::move(eqs));
    }
    if (!alive) return out; // inconsistent: empty result

    // resolve leftover quadratic relations by branching on rational roots of
    // single-parameter members
    std::vector<State> finals;
    std::vector<State> work{std::move(st)};
    int guard = 0;
    while (!work.empty()) {
        if (++guard > 256) {
            out.obstructed = true;
            return out;
        }
        State cur = std::move(work.back());
        work.pop_back();
        bool dead = false, branched = false;
        // drop identically-zero equations; constants kill the branch
        std::vector<QuadExpr> live;
        for (auto& e : cur.pending) {
            if (e.zero()) continue;
            if (e.constant()) { dead = true; break; }
            live.push_back(std::move(e));
        }
        if (dead) continue;
        cur.pending = std::move(live);
        if (cur.pending.empty()) {
            finals.push_back(std::move(cur));
            continue;
        }
        // try the affine ones first
        bool has_affine = false;
        for (const auto& e : cur.pending)
            if (e.affine()) has_affine = true;
        if (has_affine) {
            State next = cur;
            std::vector<QuadExpr> eqs = std::move(next.pending);
            next.pending.clear();
            if (stair::eliminate(next, std::move(eqs))) work.push_back(std::move(next));
            continue;
        }
        // find a single-variable member to branch on
        int branch_var = -1;
        UniPoly<Rational> upoly;
        for (const auto& e : cur.pending) {
            int v = -1;
            bool single = true;
            for (const auto& [u, c] : e.lin) {
                if (v < 0) v = u;
                else if (u != v) single = false;
            }
            for (const auto& [k2, c] : e.quad) {
                if (k2.first != k2.second) { single = false; break; }
                if (v < 0) v = k2.first;
                else if (k2.first != v) single = false;
            }
            if (!single || v < 0) continue;
            branch_var = v;
            upoly = UniPoly<Rational>(std::vector<Rational>{e.c0,
                                                            e.lin.count(v) ? e.lin.at(v) : Rational(0),
                                                            e.quad.count({v, v}) ? e.quad.at({v, v})
                                                                                 : Rational(0)});
            break;
        }
        if (branch_var < 0) {
            // bivariate leftovers: eliminate one variable by resultant and
            // branch on the rational roots of the eliminant
            std::vector<int> pvars;
            for (const auto& e : cur.pending) {
                for (const auto& [u, c] : e.lin)
                    if (std::find(pvars.begin(), pvars.end(), u) == pvars.end()) pvars.push_back(u);
                for (const auto& [k2, c] : e.quad) {
                    for (int u : {k2.first, k2.second})
                        if (std::find(pvars.begin(), pvars.end(), u) == pvars.end()) pvars.push_back(u);
                }
            }
            std::sort(pvars.begin(), pvars.end());
            if (pvars.size() != 2 || cur.pending.size() < 2) {
                out.obstructed = true; // beyond bivariate elimination
                return out;
            }
            auto to_bipoly = [&](const stair::QuadExpr& e) {
                BiPoly b(e.c0);
                for (const auto& [u, c] : e.lin)
                    b.add_term(u == pvars[0] ? Exp{1, 0} : Exp{0, 1}, c);
                for (const auto& [k2, c] : e.quad) {
                    int i = (k2.first == pvars[0]) + (k2.second == pvars[0]);
                    b.add_term(Exp{i, 2 - i}, c);
                }
                return b;
            };
            BiPoly p1 = to_bipoly(cur.pending[0]);
            BiPoly p2 = to_bipoly(cur.pending[1]);
            if (p1.degree_y() < 1 || p2.degree_y() < 1) {
                out.obstructed = true;
                return out;
            }
            UniPoly<Rational> elim = resultant_y_raw(p1, p2);
            if (elim.zero_p() || elim.degree() < 1) {
                out.obstructed = true; // shared component or no elimination
                return out;
            }
            auto uroots = rational_roots(elim);
            int cov = 0;
            for (const auto& [root, mult] : uroots) cov += mult;
            if (cov < elim.degree()) out.obstructed = true; // irrational branches exist
            for (const auto& [root, mult] : uroots) {
                State next = cur;
                std::map<int, stair::QuadExpr> subs;
                stair::QuadExpr val;
                val.c0 = root;
                subs[pvars[0]] = val;
                next.substitute(subs);
                next.free_vars.erase(
                    std::remove(next.free_vars.begin(), next.free_vars.end(), pvars[0]),
                    next.free_vars.end());
                work.push_back(std::move(next));
            }
            continue;
        }
        auto roots = rational_roots(upoly);
        int covered = 0;
        for (const auto& [root, mult] : roots) covered += mult;
        if (covered < upoly.degree()) {
            // roots outside Q exist; those solution branches are not
            // representable here
            out.obstructed = true;
        }
        for (const auto& [root, mult] : roots) {
            State next = cur;
            std::map<int, QuadExpr> subs;
            QuadExpr val;
            val.c0 = root;
            subs[branch_var] = val;
            next.substitute(subs);
            next.free_vars.erase(std::remove(next.free_vars.begin(), next.free_vars.end(), branch_var),
                                 next.free_vars.end());
            work.push_back(std::move(next));
            branched = true;
        }
        if (!branched) continue; // no rational roots: branch dies
    }

    // build one family per final state
    for (State& fs : finals) {
        auto build = [&](const State& s, int param, bool direction) {
            BiPoly f = direction ? BiPoly::zero() : f_n;
            BiPoly k = direction ? BiPoly::zero() : *kappa;
            for (const auto& [key, e] : s.fslots) {
                Rational c = direction ? (e.lin.count(param) ? e.lin.at(param) : Rational(0)) : e.c0;
                if (c != 0) f.add_term(Exp{key.second, key.first - key.second}, c);
            }
            for (const auto& [key, e] : s.kslots) {
                Rational c = direction ? (e.lin.count(param) ? e.lin.at(param) : Rational(0)) : e.c0;
                if (c != 0) k.add_term(Exp{key.second, key.first - key.second}, c);
            }
            return std::make_pair(f, k);
        };
        auto [frep, krep] = build(fs, -1, false);
        Certificate rep;
        rep.field = V;
        rep.f = frep;
        rep.k = krep;
        rep.n = frep.degree();
        rep.first_integral = krep.zero_p();
        rep.irreducibility = classify_irreducibility(frep);
        if (!verify_certificate(rep).ok)
            throw std::logic_error("staircase representative fails Eq.(2)");

        CertificateFamily fam;
        fam.dimension = static_cast<int>(fs.free_vars.size());
        for (int pv : fs.free_vars) {
            auto [df, dk] = build(fs, pv, true);
            Certificate shifted;
            shifted.field = V;
            shifted.f = frep + df;
            shifted.k = krep + dk;
            shifted.n = shifted.f.degree();
            if (!verify_certificate(shifted).ok)
                throw std::logic_error("staircase family direction fails Eq.(2)");
            fam.directions.push_back({df, dk});
        }
        fam.representative = std::move(rep);
        out.families.push_back(std::move(fam));
    }
    // deterministic order, deduplicated representatives
    std::sort(out.families.begin(), out.families.end(),
              [](const CertificateFamily& a, const CertificateFamily& b) {
                  return to_string(a.representative.f) < to_string(b.representative.f);
              });
    out.families.erase(std::unique(out.families.begin(), out.families.end(),
                                   [](const CertificateFamily& a, const CertificateFamily& b) {
                                       return a.representative.f == b.representative.f &&
                                              a.representative.k == b.representative.k;
                                   }),
                       out.families.end());
    return out;
}

// ---------------------------------------------------------------------------
// Search driver
// ---------------------------------------------------------------------------

struct SearchFinding {
    Certificate cert; // normalized: f monic in graded-lex
    int family_dim = 0;
    std::vector<std::pair<BiPoly, BiPoly>> directions; // basis of the family
    BiPoly leading_form;
};

struct SearchReport {
    int max_degree = 0;
    BoundRule rule;
    bool complete = true; // every leading form rationally enumerable, no obstructions
    std::vector<SearchFinding> findings;
    std::map<int, int> candidates_per_degree;
    int obstructed_candidates = 0;
    // Darboux integrability
    int certificate_count = 0;
    Int threshold = 0; // 2 + m(m+1)/2
    bool rational_first_integral = false;
};

struct SearchConfig {
    BoundRule rule = BoundRule::smooth();
};

/// Is f a product of the already-found curves (up to a constant)?
inline bool is_product_of(const BiPoly& f, const std::vector<SearchFinding>& found) {
    BiPoly rest = f;
    bool progress = true;
    while (progress && rest.degree() > 0) {
        progress = false;
        for (const auto& g : found) {
            if (g.cert.f.degree() > rest.degree()) continue;
            bool ok = false;
            BiPoly q = exact_divide(rest, g.cert.f, ok);
            if (ok) {
                rest = q;
                progress = true;
                break;
            }
        }
    }
    return rest.degree() == 0;
}

inline SearchReport search_curves(const VectorField& V, const SearchConfig& cfg) {
    SearchReport out;
    out.rule = cfg.rule;
    out.max_degree = degree_bound(V, cfg.rule);
    BiPoly R = r_infinity(V);
    if (R.zero_p()) throw DicriticalInfinity();

    for (int n = 1; n <= out.max_degree; ++n) {
        LeadingFormSet lfs = enumerate_leading_forms(V, n);
        out.complete = out.complete && lfs.complete;
        out.candidates_per_degree[n] = static_cast<int>(lfs.forms.size());
        for (const auto& lf : lfs.forms) {
            SolveOutcome so = solve_from_leading_form(V, lf.form);
            if (so.skipped) continue;
            if (so.obstructed) {
                ++out.obstructed_candidates;
                out.complete = false;
            }
            for (const auto& fam : so.families) {
                Certificate cert = fam.representative;
                // normalize to glex-monic f (the cofactor is scale-invariant)
                Rational lead = cert.f.leading().second;
                cert.f = cert.f.monic_glex();
                bool dup = false;
                for (const auto& g : out.findings)
                    if (g.cert.f == cert.f) { dup = true; break; }
                if (dup) continue;
                if (is_product_of(cert.f, out.findings)) continue;
                if (!verify_certificate(cert).ok)
                    throw std::logic_error("search produced a bad certificate");
                SearchFinding finding;
                finding.family_dim = fam.dimension;
                for (const auto& [df, dk] : fam.directions)
                    finding.directions.push_back({df.scaled(1 / lead), dk.scaled(1 / lead)});
                finding.leading_form = lf.form;
                finding.cert = std::move(cert);
                out.findings.push_back(std::move(finding));
            }
        }
    }
    // conditional irreducibility: exhaustive lower-degree search found no divisor
    for (auto& fnd : out.findings) {
        if (fnd.cert.irreducibility == Irreducibility::unknown && out.complete &&
            fnd.family_dim == 0 && out.obstructed_candidates == 0)
            fnd.cert.irreducibility = Irreducibility::verified;
    }
    std::sort(out.findings.begin(), out.findings.end(), [](const SearchFinding& a, const SearchFinding& b) {
        if (a.cert.n != b.cert.n) return a.cert.n < b.cert.n;
        return to_string(a.cert.f) < to_string(b.cert.f);
    });
    out.certificate_count = static_cast<int>(out.findings.size());
    out.threshold = 2 + Int(V.m) * Int(V.m + 1) / 2;
    out.rational_first_integral = Int(out.certificate_count) > out.threshold;
    return out;
}

struct IntegrabilityVerdict {
    int count = 0;
    Int threshold = 0;
    bool guaranteed = false; // count > 2 + m(m+1)/2
};

inline IntegrabilityVerdict integrability_report(const std::vector<Certificate>& certs, int m) {
    IntegrabilityVerdict out;
    out.count = static_cast<int>(certs.size());
    out.threshold = 2 + Int(m) * Int(m + 1) / 2;
    out.guaranteed = Int(out.count) > out.threshold;
    return out;
}

} // namespace darboux
