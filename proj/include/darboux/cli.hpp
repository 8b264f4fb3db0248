#pragma once

#include <json.hpp>

#include <sstream>

#include "darboux/singular.hpp"
#include "darboux/sysfile.hpp"
#include "darboux/version.hpp"

namespace darboux {

using Json = nlohmann::ordered_json;

struct CliOptions {
    bool json = false;
    std::optional<int> max_degree;
    std::optional<BoundRule> bound_rule;
    std::optional<int> shear_seed;
};

struct CommandResult {
    int exit_code = 0;
    std::string output; // full stdout payload (text or JSON)
};

namespace cli_detail {

inline Json json_complex(const std::complex<double>& z) {
    return Json{{"re", z.real()}, {"im", z.imag()}};
}

inline Json json_projective_point(const ProjectivePoint& p) {
    Json j;
    if (p.rational) {
        j["point"] = "[" + to_string(p.x) + ":" + to_string(p.y) + "]";
    } else {
        j["conjugate_class"] = to_string(p.min_poly, "z");
        j["note"] = "points [1:z] for roots z";
        Json ap = Json::array();
        for (const auto& z : p.approx) ap.push_back(json_complex(z));
        j["approx"] = {{"certified", false}, {"slopes", ap}};
    }
    j["multiplicity"] = p.multiplicity;
    j["class_size"] = p.class_size;
    return j;
}

inline Json json_equilibria(const Equilibria& eq) {
    Json j;
    Json pts = Json::array();
    for (const auto& [x, y] : eq.rational_points)
        pts.push_back(Json{{"x", to_string(x)}, {"y", to_string(y)}});
    j["rational_points"] = pts;
    Json cls = Json::array();
    for (const auto& c : eq.classes) {
        Json e;
        e["x_poly"] = to_string(c.x_poly, "x");
        if (c.x_value) e["x"] = to_string(*c.x_value);
        if (c.y_poly) e["y_poly"] = to_string(*c.y_poly, "y");
        if (c.y_affine)
            e["y"] = to_string(c.y_affine->first) + " + (" + to_string(c.y_affine->second) + ")*x";
        e["size"] = c.size;
        e["certified"] = c.certified;
        Json ap = Json::array();
        for (const auto& q : c.approx)
            ap.push_back(Json{{"x_re", q[0]}, {"x_im", q[1]}, {"y_re", q[2]}, {"y_im", q[3]}});
        e["approx"] = {{"certified", false}, {"points", ap}};
        cls.push_back(std::move(e));
    }
    j["conjugate_classes"] = cls;
    j["count_min"] = eq.count_min;
    j["count_max"] = eq.count_max;
    j["count_exact"] = eq.exact;
    return j;
}

inline Json json_sing_point(const SingPoint& p) {
    Json j;
    j["location"] = p.key();
    switch (p.loc) {
        case SingPoint::Loc::affine_rational:
            j["kind"] = "affine";
            j["x"] = to_string(p.ax);
            j["y"] = to_string(p.ay);
            break;
        case SingPoint::Loc::affine_quad:
            j["kind"] = "affine-conjugate-pair";
            j["x_poly"] = to_string(p.min_poly, "x");
            if (p.y_affine)
                j["y"] = to_string(p.y_affine->first) + " + (" + to_string(p.y_affine->second) + ")*x";
            break;
        case SingPoint::Loc::affine_yclass:
            j["kind"] = "affine-conjugate-class";
            j["x"] = to_string(p.ax);
            j["y_poly"] = to_string(p.min_poly, "y");
            break;
        case SingPoint::Loc::affine_xclass:
            j["kind"] = "affine-unresolved-class";
            j["x_poly"] = to_string(p.min_poly, "x");
            break;
        case SingPoint::Loc::inf_rational:
            j["kind"] = "infinity";
            j["v"] = to_string(p.ax);
            break;
        case SingPoint::Loc::inf_quad:
        case SingPoint::Loc::inf_class:
            j["kind"] = "infinity-conjugate-class";
            j["v_poly"] = to_string(p.min_poly, "v");
            break;
        case SingPoint::Loc::inf_far:
            j["kind"] = "infinity-far";
            j["point"] = "[0:1:0]";
            break;
    }
    j["class_size"] = p.size;
    if (p.resolved) {
        j["int_number"] = to_string(p.inv.int_ffy);
        j["nu"] = to_string(p.inv.nu);
        j["branches"] = static_cast<int>(p.inv.branches);
        j["delta_std"] = to_string(p.inv.delta_std);
        j["delta_paper"] = to_string(p.inv.delta_paper);
        if (p.local_shear) j["local_shear"] = p.local_shear;
    }
    j["certified"] = p.certified;
    if (!p.approx.empty()) {
        Json ap = Json::array();
        for (const auto& q : p.approx)
            ap.push_back(Json{{"x_re", q[0]}, {"x_im", q[1]}, {"y_re", q[2]}, {"y_im", q[3]}});
        j["approx"] = {{"certified", false}, {"points", ap}};
    }
    return j;
}

inline Json json_certificate(const Certificate& c) {
    Json j;
    j["f"] = to_string(c.f);
    j["k"] = to_string(c.k);
    j["n"] = c.n;
    j["deg_k"] = c.k.degree();
    j["first_integral"] = c.first_integral;
    switch (c.irreducibility) {
        case Irreducibility::verified: j["irreducibility"] = "verified"; break;
        case Irreducibility::reducible: j["irreducibility"] = "reducible"; break;
        case Irreducibility::unknown: j["irreducibility"] = "unknown"; break;
    }
    return j;
}

inline Json header(const char* command, const SystemFile& sys, const CliOptions& opt) {
    Json j;
    j["schema"] = 1;
    j["tool"] = {{"name", "darboux"}, {"version", kVersion}};
    j["command"] = command;
    Json input;
    input["path"] = sys.path;
    if (sys.P) input["P"] = to_string(*sys.P);
    if (sys.Q) input["Q"] = to_string(*sys.Q);
    Json curves = Json::array();
    for (const auto& f : sys.curves) curves.push_back(to_string(f));
    input["curves"] = curves;
    Json options;
    if (opt.max_degree) options["max_degree"] = *opt.max_degree;
    else if (sys.max_degree) options["max_degree"] = *sys.max_degree;
    if (opt.bound_rule) options["bound_rule"] = opt.bound_rule->name();
    else if (sys.bound_rule) options["bound_rule"] = sys.bound_rule->name();
    options["shear_seed"] = opt.shear_seed ? *opt.shear_seed : sys.shear_seed.value_or(0);
    input["options"] = options;
    j["input"] = input;
    return j;
}

inline VectorField require_field(const SystemFile& sys) {
    if (!sys.P || !sys.Q) throw ValidationError("this command needs both P and Q definitions");
    return make_field(*sys.P, *sys.Q);
}

inline int effective_seed(const SystemFile& sys, const CliOptions& opt) {
    return opt.shear_seed ? *opt.shear_seed : sys.shear_seed.value_or(0);
}

inline Json field_section(const VectorField& V) {
    Json j;
    j["m"] = V.m;
    BiPoly R = r_infinity(V);
    j["R"] = to_string(R);
    j["dicritical"] = R.zero_p();
    if (!R.zero_p()) {
        DarbouxDivisor div = darboux_divisor(V);
        Json pts = Json::array();
        for (const auto& p : div.points) pts.push_back(json_projective_point(p));
        j["darboux_divisor"] = {{"total", div.total}, {"points", pts}};
    }
    return j;
}

} // namespace cli_detail

// ---------------------------------------------------------------------------

inline Json cmd_analyze_json(const SystemFile& sys, const CliOptions& opt) {
    using namespace cli_detail;
    VectorField V = require_field(sys);
    Json j = header("analyze", sys, opt);
    j["field"] = field_section(V);
    // Proposition-1 view: singular points at infinity are the divisor points
    j["infinity_singular_points"] =
        r_infinity(V).zero_p() ? Json("dicritical: every direction is singular at infinity")
                               : j["field"]["darboux_divisor"]["points"];
    j["equilibria"] = json_equilibria(finite_equilibria(V));
    return j;
}

inline Json cmd_verify_json(const SystemFile& sys, const CliOptions& opt) {
    using namespace cli_detail;
    VectorField V = require_field(sys);
    if (sys.curves.empty()) throw ValidationError("verify needs at least one curve line (f = ...)");
    int seed = effective_seed(sys, opt);
    Json j = header("verify", sys, opt);
    j["field"] = field_section(V);
    Json curves = Json::array();
    for (const auto& f : sys.curves) {
        Json cj;
        cj["f"] = to_string(f);
        auto cert = compute_cofactor(V, f);
        if (!cert) {
            cj["invariant"] = false;
            BiPoly w = V.P * f.dx() + V.Q * f.dy();
            cj["residual_numerator"] = to_string(w);
            Json t1;
            t1["status"] = "not-applicable";
            cj["theorem1"] = t1;
        } else {
            cj["invariant"] = true;
            cj["certificate"] = json_certificate(*cert);
            Theorem1Verdict t1 = check_theorem1(V, f);
            Json t1j;
            t1j["status"] = to_cstring(t1.status);
            if (t1.status == VerdictStatus::fails) t1j["offending_factor"] = to_string(t1.offending);
            cj["theorem1"] = t1j;
            Theorem4Verdict t4 = check_theorem4(*cert, seed);
            Json t4j;
            t4j["status"] = to_cstring(t4.status);
            t4j["affine_singular_points_checked"] = t4.points_checked;
            if (!t4.violations.empty()) t4j["violations"] = t4.violations;
            cj["theorem4"] = t4j;
            Json bounds;
            bounds["n"] = cert->n;
            bounds["smooth_bound_m_plus_1"] = V.m + 1;
            bounds["n_le_smooth_bound"] = cert->n <= V.m + 1;
            bounds["nodal_bound_2m_plus_2"] = 2 * (V.m + 1);
            bounds["n_le_nodal_bound"] = cert->n <= 2 * (V.m + 1);
            cj["degree_bounds"] = bounds;
        }
        curves.push_back(std::move(cj));
    }
    j["curves"] = curves;
    return j;
}

inline Json cmd_search_json(const SystemFile& sys, const CliOptions& opt) {
    using namespace cli_detail;
    VectorField V = require_field(sys);
    SearchConfig cfg;
    if (opt.max_degree)
        cfg.rule = BoundRule::explicit_n(*opt.max_degree);
    else if (opt.bound_rule)
        cfg.rule = *opt.bound_rule;
    else if (sys.max_degree)
        cfg.rule = BoundRule::explicit_n(*sys.max_degree);
    else if (sys.bound_rule)
        cfg.rule = *sys.bound_rule;
    SearchReport rep = search_curves(V, cfg); // throws DicriticalInfinity -> exit 4
    Json j = header("search", sys, opt);
    j["field"] = field_section(V);
    Json s;
    s["bound_rule"] = rep.rule.name();
    s["max_degree"] = rep.max_degree;
    s["complete"] = rep.complete;
    s["obstructed_candidates"] = rep.obstructed_candidates;
    Json per = Json::object();
    for (const auto& [n, c] : rep.candidates_per_degree) per[std::to_string(n)] = c;
    s["candidates_per_degree"] = per;
    Json finds = Json::array();
    for (const auto& f : rep.findings) {
        Json fj = json_certificate(f.cert);
        fj["family_dimension"] = f.family_dim;
        fj["leading_form"] = to_string(f.leading_form);
        finds.push_back(std::move(fj));
    }
    s["certificates"] = finds;
    s["integrability"] = {{"count", rep.certificate_count},
                          {"threshold", to_string(rep.threshold)},
                          {"status", rep.rational_first_integral
                                         ? "rational first integral exists"
                                         : "inconclusive"}};
    j["search"] = s;
    return j;
}

inline Json cmd_genus_json(const SystemFile& sys, const CliOptions& opt) {
    using namespace cli_detail;
    if (sys.curves.empty()) throw ValidationError("genus needs at least one curve line (f = ...)");
    std::optional<VectorField> V;
    if (sys.P && sys.Q) V = make_field(*sys.P, *sys.Q);
    int seed = effective_seed(sys, opt);
    Json j = header("genus", sys, opt);
    if (V) j["field"] = field_section(*V);
    Json curves = Json::array();
    for (const auto& f : sys.curves) {
        Json cj;
        cj["f"] = to_string(f);
        GenusReport rep = genus_report(f, seed);
        cj["n"] = rep.n;
        cj["shear_used"] = rep.analysis.shear_used;
        Json pts = Json::array();
        for (const auto& p : rep.analysis.points) pts.push_back(json_sing_point(p));
        cj["singular_points"] = pts;
        if (rep.genus_certified) {
            cj["genus"] = to_string(rep.genus);
            cj["delta_sum"] = to_string(rep.delta_sum);
        } else {
            cj["genus"] = nullptr;
            cj["status"] = "uncertified";
        }
        if (rep.branches_known) cj["sum_branches"] = to_string(rep.sum_branches);

        InfinityClassification ic = classify_infinity(f);
        Json icj;
        icj["r"] = ic.r;
        icj["sum_m"] = ic.sum_m;
        icj["sum_l"] = ic.sum_l;
        Json entries = Json::array();
        for (const auto& e : ic.entries) {
            Json ej;
            ej["where"] = e.key();
            ej["multiplicity"] = e.multiplicity;
            ej["class"] = std::string("V") + std::to_string(e.cls);
            ej["class_size"] = e.class_size;
            entries.push_back(std::move(ej));
        }
        icj["entries"] = entries;
        cj["infinity_classification"] = icj;

        if (V) {
            if (rep.genus_certified) {
                Int lhs = 2 * rep.genus - 2;
                Int rhs = Int(rep.n) * Int(V->m - 1) - rep.sum_branches;
                cj["eq24"] = {{"status", lhs <= rhs ? "holds" : "fails"},
                              {"lhs_2g_minus_2", to_string(lhs)},
                              {"rhs", to_string(rhs)}};
            } else {
                cj["eq24"] = {{"status", "uncertified"}};
            }
            if (!rep.analysis.points.empty() && rep.analysis.all_resolved) {
                // Theorem-6 degree bound for K = 1 (the nodal convention) and
                // for the computed max of (f, f_y)_X over Sing(C)
                Int kmax = 0;
                for (const auto& p : rep.analysis.points) kmax = std::max(kmax, p.inv.int_ffy);
                Json e25;
                int b1 = degree_bound(*V, BoundRule::k_bounded(1));
                e25["k1"] = {{"bound", b1}, {"n_le_bound", rep.n <= b1}};
                if (kmax >= 1) {
                    int kc = static_cast<int>(kmax.template convert_to<long>());
                    int bk = degree_bound(*V, BoundRule::k_bounded(kc));
                    e25["k_computed"] = {{"K", kc}, {"bound", bk}, {"n_le_bound", rep.n <= bk}};
                }
                cj["eq25"] = e25;
            }
            SingCountVerdict sc = sing_count_check(f, *V, seed);
            Json scj;
            scj["affine_count"] = sc.affine_min == sc.affine_max
                                      ? Json(sc.affine_min)
                                      : Json{{"min", sc.affine_min}, {"max", sc.affine_max}};
            scj["total_count"] = sc.total_min == sc.total_max
                                     ? Json(sc.total_min)
                                     : Json{{"min", sc.total_min}, {"max", sc.total_max}};
            scj["affine_le_m2"] = {{"status", to_cstring(sc.affine_status)},
                                   {"bound", to_string(sc.bound_affine)}};
            if (sc.bound_total)
                scj["total_le_m2_plus_m_plus_1"] = {{"status", to_cstring(sc.total_status)},
                                                    {"bound", to_string(*sc.bound_total)}};
            scj["total_le_m2_plus_n_over_2"] = {{"status", to_cstring(sc.lemma4_status)},
                                                {"bound", to_string(sc.bound_lemma4)}};
            cj["count_bounds"] = scj;
        }
        if (rep.analysis.points.empty()) {
            RamificationReport rr = ramification_report(f, V ? &*V : nullptr, seed);
            Json rj;
            rj["genus"] = to_string(rr.genus);
            rj["deg_R2"] = to_string(rr.deg_r2);
            rj["deg_R1"] = to_string(rr.deg_r1);
            rj["shear_used"] = rr.shear_used;
            rj["lemma1_degR1_le_n_minus_1"] = rr.lemma1_holds;
            if (rr.lemma3_rhs)
                rj["lemma3_degR2_le_mn"] = {{"holds", rr.lemma3_holds}, {"bound", to_string(*rr.lemma3_rhs)}};
            cj["ramification"] = rj;
        }
        curves.push_back(std::move(cj));
    }
    j["curves"] = curves;
    return j;
}

// ---------------------------------------------------------------------------
// Text rendering and the driver
// ---------------------------------------------------------------------------

namespace cli_detail {

inline void render_text(const Json& j, std::ostream& os, int indent = 0) {
    std::string pad(indent, ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() || v.is_array()) {
                os << pad << k << ":\n";
                render_text(v, os, indent + 2);
            } else {
                os << pad << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else if (j.is_array()) {
        int idx = 0;
        for (const auto& v : j) {
            os << pad << "- [" << idx++ << "]\n";
            render_text(v, os, indent + 2);
        }
    } else {
        os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

} // namespace cli_detail

inline CommandResult run_command(const std::string& command, const std::string& path,
                                 const CliOptions& opt) {
    CommandResult res;
    try {
        SystemFile sys = parse_system_file(path);
        Json j;
        if (command == "analyze")
            j = cmd_analyze_json(sys, opt);
        else if (command == "verify")
            j = cmd_verify_json(sys, opt);
        else if (command == "search")
            j = cmd_search_json(sys, opt);
        else if (command == "genus")
            j = cmd_genus_json(sys, opt);
        else
            throw ValidationError("unknown command '" + command + "'");
        if (opt.json) {
            res.output = j.dump(2) + "\n";
        } else {
            std::ostringstream os;
            cli_detail::render_text(j, os);
            res.output = os.str();
        }
        res.exit_code = 0;
    } catch (const FileParseError& e) {
        res.exit_code = 2;
        res.output = "parse error: " + std::string(e.what()) + " (line " + std::to_string(e.line) +
                     ", offset " + std::to_string(e.offset) + ")\n";
    } catch (const DicriticalInfinity& e) {
        res.exit_code = 4;
        res.output = std::string("analysis unavailable: ") + e.what() + "\n";
    } catch (const ValidationError& e) {
        res.exit_code = 3;
        res.output = "validation error: " + std::string(e.what()) + "\n";
    }
    return res;
}

} // namespace darboux
