// Command-line front end.  Every subcommand emits either a human-readable
// text report or (with --json) a single JSON document with schema tag
// "singclass/1"; all potentially large integers are serialized as decimal
// strings.  Exit codes: 0 success, 1 negative verification, 2 usage or
// precondition error, 3 internal error.
#pragma once

#include "brieskorn.hpp"
#include "curves.hpp"
#include "hilbert.hpp"
#include "lnd.hpp"
#include "parse.hpp"
#include "quotients.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace singclass::cli {

using nlohmann::json;

namespace detail_cli {

inline const char* yesno(bool b) { return b ? "yes" : "no"; }

inline json big(const Int& v) { return v.str(); }
inline json big(long long v) { return std::to_string(v); }

inline json big_list(const std::vector<Int>& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(x.str());
    return a;
}

inline std::string join_Int(const std::vector<Int>& v) {
    std::string s;
    for (const Int& x : v) {
        if (!s.empty()) s += " ";
        s += x.str();
    }
    return s;
}

inline json kodaira_json(const hilbert::KodairaDim& k) { return k.str(); }

inline std::vector<long long> parse_ll_list(const std::string& text,
                                            const char* what) {
    std::vector<long long> out;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            long long v = std::stoll(item, &pos);
            while (pos < item.size() &&
                   std::isspace(static_cast<unsigned char>(item[pos])))
                ++pos;
            if (pos != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (...) {
            throw std::invalid_argument(std::string(what) +
                                        ": malformed integer '" + item + "'");
        }
    }
    if (out.empty())
        throw std::invalid_argument(std::string(what) + ": empty list");
    return out;
}

inline std::string monomial_xy(long long a, long long b) {
    std::string s;
    if (a > 0) {
        s += "x";
        if (a > 1) s += "^" + std::to_string(a);
    }
    if (b > 0) {
        if (!s.empty()) s += "*";
        s += "y";
        if (b > 1) s += "^" + std::to_string(b);
    }
    return s.empty() ? "1" : s;
}

inline json schwartz_report_json(const curves::WeightedFermatIdentity& id,
                                 const curves::VerificationReport& r) {
    json j;
    j["name"] = id.name;
    j["exponents"] = id.exponents;
    j["status"] = id.status == curves::IdentityStatus::as_printed
                      ? "as-printed"
                      : "documented-variant";
    j["note"] = id.note;
    json comps = json::array();
    for (const auto& c : id.components)
        comps.push_back({{"constant", c.constant.str()},
                         {"polynomial", c.polynomial.str()},
                         {"exponent", c.exponent}});
    j["components"] = comps;
    j["holds"] = r.holds;
    if (!r.holds) {
        j["first_mismatch_exponent"] = (*r.first_mismatch_exponent)[0];
        j["first_mismatch_coefficient"] = r.first_mismatch_coefficient->str();
    }
    j["component_degrees"] = r.component_degrees;
    j["pairwise_coprime"] = r.pairwise_coprime;
    return j;
}

inline void schwartz_report_text(std::ostream& out,
                                 const curves::WeightedFermatIdentity& id,
                                 const curves::VerificationReport& r) {
    out << "identity: " << id.name << "  (p, q, r) = (" << id.exponents[0]
        << ", " << id.exponents[1] << ", " << id.exponents[2] << ")  ["
        << (id.status == curves::IdentityStatus::as_printed ? "as printed"
                                                            : "documented variant")
        << "]\n";
    out << "holds: " << yesno(r.holds) << "\n";
    if (!r.holds)
        out << "first mismatch: coefficient "
            << r.first_mismatch_coefficient->str() << " at exponent "
            << (*r.first_mismatch_exponent)[0] << "\n";
    out << "component degrees: " << r.component_degrees[0] << " "
        << r.component_degrees[1] << " " << r.component_degrees[2] << "\n";
    out << "pairwise coprime: " << yesno(r.pairwise_coprime[0]) << " "
        << yesno(r.pairwise_coprime[1]) << " " << yesno(r.pairwise_coprime[2])
        << "\n";
}

inline lnd::Derivation parse_derivation(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> lines;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        std::string trimmed = line;
        std::size_t first = trimmed.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (trimmed[first] == '#') continue;
        std::size_t arrow = trimmed.find("->");
        if (arrow == std::string::npos)
            throw std::invalid_argument(
                "derivation: each line must have the form 'var -> expression'");
        std::string name = trimmed.substr(0, arrow);
        std::string expr = trimmed.substr(arrow + 2);
        name.erase(0, name.find_first_not_of(" \t"));
        name.erase(name.find_last_not_of(" \t\r") + 1);
        if (name.empty())
            throw std::invalid_argument("derivation: missing variable name");
        lines.emplace_back(name, expr);
    }
    if (lines.empty())
        throw std::invalid_argument("derivation: no variable lines found");
    std::vector<std::string> vars;
    for (const auto& [name, expr] : lines) {
        if (std::find(vars.begin(), vars.end(), name) != vars.end())
            throw std::invalid_argument("derivation: duplicate variable " + name);
        vars.push_back(name);
    }
    std::vector<Poly> images;
    for (const auto& [name, expr] : lines) images.push_back(parse_poly(expr, vars));
    return lnd::Derivation(vars, images);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void print_derivation(std::ostream& out, const lnd::Derivation& d,
                             const char* indent = "  ") {
    for (std::size_t i = 0; i < d.vars().size(); ++i)
        out << indent << d.vars()[i] << " -> " << d.image(i).str() << "\n";
}

inline json derivation_json(const lnd::Derivation& d) {
    json j;
    j["vars"] = d.vars();
    json imgs = json::object();
    for (std::size_t i = 0; i < d.vars().size(); ++i)
        imgs[d.vars()[i]] = d.image(i).str();
    j["images"] = imgs;
    return j;
}

inline json verdict_json(const lnd::NilpotencyVerdict& v,
                         const std::vector<std::string>& vars) {
    json j;
    j["status"] = lnd::to_string(v.status);
    j["cap"] = v.cap;
    json steps = json::object();
    for (std::size_t i = 0; i < vars.size(); ++i)
        steps[vars[i]] = v.vanishing_steps[i];
    j["vanishing_steps"] = steps;
    return j;
}

}  // namespace detail_cli

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using namespace detail_cli;

    CLI::App app{"singclass: exact classification of quasihomogeneous singularities"};
    app.require_subcommand(1);

    // ---- triple ------------------------------------------------------
    auto* cmd_triple = app.add_subcommand(
        "triple", "Classify the surface x^p + y^q + z^r = 0");
    std::vector<long long> triple_pqr;
    long long triple_mmax = 12;
    long long triple_sweep = 0;
    bool triple_json = false;
    cmd_triple->add_option("pqr", triple_pqr, "exponents p q r")->expected(0, 3);
    cmd_triple->add_option("--mmax", triple_mmax, "table length for delta/pbar");
    cmd_triple->add_option("--sweep", triple_sweep,
                           "check the classification equivalences for all "
                           "2 <= p <= q <= r <= RMAX");
    cmd_triple->add_flag("--json", triple_json, "JSON output");

    // ---- ci ----------------------------------------------------------
    auto* cmd_ci = app.add_subcommand(
        "ci", "Classify a quasihomogeneous complete intersection");
    std::string ci_weights, ci_degrees;
    long long ci_mmax = 12;
    bool ci_json = false;
    cmd_ci->add_option("--weights", ci_weights, "comma-separated weights")->required();
    cmd_ci->add_option("--degrees", ci_degrees, "comma-separated degrees");
    cmd_ci->add_option("--mmax", ci_mmax, "table length for delta/pbar");
    cmd_ci->add_flag("--json", ci_json, "JSON output");

    // ---- veronese ----------------------------------------------------
    auto* cmd_ver = app.add_subcommand(
        "veronese", "Quotient of a Pham-Brieskorn surface by Z_d in the torus");
    std::vector<long long> ver_pqr;
    long long ver_d = 0, ver_mmax = 12;
    bool ver_json = false;
    cmd_ver->add_option("pqr", ver_pqr, "exponents p q r")->expected(3);
    cmd_ver->add_option("--d", ver_d, "quotient degree")->required();
    cmd_ver->add_option("--mmax", ver_mmax, "table length");
    cmd_ver->add_flag("--json", ver_json, "JSON output");

    // ---- hypersurface --------------------------------------------------
    auto* cmd_hyp = app.add_subcommand(
        "hypersurface", "Classify the Fermat hypersurface sum x_i^{p_i} = 0");
    std::string hyp_exps;
    bool hyp_json = false;
    cmd_hyp->add_option("exponents", hyp_exps, "comma-separated exponents")->required();
    cmd_hyp->add_flag("--json", hyp_json, "JSON output");

    // ---- cone ----------------------------------------------------------
    auto* cmd_cone = app.add_subcommand(
        "cone", "Classify the cone surface F_d(x, y) = z^m");
    long long cone_d = 0, cone_m = 0;
    std::string cone_form;
    bool cone_json = false;
    cmd_cone->add_option("d", cone_d, "degree of F")->required();
    cmd_cone->add_option("m", cone_m, "exponent of z")->required();
    cmd_cone->add_option("--form", cone_form,
                         "coefficients of F from x^d down to y^d, comma-separated");
    cmd_cone->add_flag("--json", cone_json, "JSON output");

    // ---- schwartz -------------------------------------------------------
    auto* cmd_schwartz = app.add_subcommand(
        "schwartz", "Verify the classical Fermat-equation identities");
    std::string schwartz_name = "all";
    bool schwartz_json = false;
    cmd_schwartz->add_option(
        "name", schwartz_name,
        "identity name (dihedral:D, tetrahedral, octahedral, octahedral-variant, "
        "icosahedral) or 'all'");
    cmd_schwartz->add_flag("--json", schwartz_json, "JSON output");

    // ---- trivial --------------------------------------------------------
    auto* cmd_trivial = app.add_subcommand(
        "trivial", "Build and check a trivial solution from a constant one");
    std::string trivial_exps, trivial_f, trivial_consts = "1,1,-2";
    bool trivial_json = false;
    cmd_trivial->add_option("--exponents", trivial_exps, "P,Q,R")->required();
    cmd_trivial->add_option("--f", trivial_f, "polynomial f")->required();
    cmd_trivial->add_option("--constants", trivial_consts,
                            "alpha,beta,gamma with alpha+beta+gamma = 0");
    cmd_trivial->add_flag("--json", trivial_json, "JSON output");

    // ---- cyclic ---------------------------------------------------------
    auto* cmd_cyclic = app.add_subcommand(
        "cyclic", "Cyclic quotient C^2 / (x, y) ~ (zeta x, zeta^e y)");
    long long cyc_d = 0, cyc_e = 0;
    bool cyc_json = false;
    cmd_cyclic->add_option("d", cyc_d, "order of the group")->required();
    cmd_cyclic->add_option("e", cyc_e, "twist exponent")->required();
    cmd_cyclic->add_flag("--json", cyc_json, "JSON output");

    // ---- lnd ------------------------------------------------------------
    auto* cmd_lnd = app.add_subcommand("lnd", "Locally nilpotent derivations");
    cmd_lnd->require_subcommand(1);

    auto* cmd_lnd_verify = cmd_lnd->add_subcommand(
        "verify", "Check local nilpotency of a derivation file");
    std::string lv_file, lv_weights;
    long long lv_cap = 0;
    bool lv_json = false;
    cmd_lnd_verify->add_option("file", lv_file, "derivation file (var -> expr lines)")
        ->required();
    cmd_lnd_verify->add_option("--cap", lv_cap, "iteration cap (0 = automatic)");
    cmd_lnd_verify->add_option("--weights", lv_weights,
                               "report per-part verdicts for these weights");
    cmd_lnd_verify->add_flag("--json", lv_json, "JSON output");

    auto* cmd_lnd_flow = cmd_lnd->add_subcommand(
        "flow", "Exponential flow of a locally nilpotent derivation file");
    std::string lf_file, lf_param = "t";
    long long lf_cap = 0;
    bool lf_json = false;
    cmd_lnd_flow->add_option("file", lf_file, "derivation file")->required();
    cmd_lnd_flow->add_option("--cap", lf_cap, "iteration cap (0 = automatic)");
    cmd_lnd_flow->add_option("--param", lf_param, "flow parameter name");
    cmd_lnd_flow->add_flag("--json", lf_json, "JSON output");

    auto* cmd_lnd_suspend = cmd_lnd->add_subcommand(
        "suspend", "Suspension derivation of u v = p(x_1, ...)");
    std::string ls_p, ls_vars;
    long long ls_cap = 0;
    bool ls_json = false;
    cmd_lnd_suspend->add_option("--p", ls_p, "polynomial p")->required();
    cmd_lnd_suspend->add_option("--vars", ls_vars, "comma-separated variable list");
    cmd_lnd_suspend->add_option("--cap", ls_cap, "iteration cap (0 = automatic)");
    cmd_lnd_suspend->add_flag("--json", ls_json, "JSON output");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        // ---------------- triple ----------------
        if (*cmd_triple) {
            if (triple_sweep > 0) {
                if (!triple_pqr.empty())
                    throw std::invalid_argument("triple: --sweep excludes p q r");
                long long rmax = triple_sweep;
                long long count = 0, platonic_count = 0;
                bool agree = true;
                for (long long p = 2; p <= rmax; ++p)
                    for (long long q = p; q <= rmax; ++q)
                        for (long long r = q; r <= rmax; ++r) {
                            ++count;
                            auto ci = brieskorn::triple_ci(p, q, r);
                            long long n = hilbert::normal_degree(ci);
                            bool reciprocal = q * r + p * r + p * q > p * q * r;
                            bool ddz = hilbert::deltas_all_zero(ci, triple_mmax);
                            bool quasi = brieskorn::quasirational_conditions(p, q, r);
                            bool quasi_dim = hilbert::graded_dim(ci, n) == 0;
                            if (reciprocal) ++platonic_count;
                            agree = agree && (reciprocal == (n < 0)) &&
                                    (ddz == (n < 0)) && (quasi == quasi_dim);
                        }
                json j;
                j["schema"] = "singclass/1";
                j["command"] = "triple-sweep";
                j["r_max"] = rmax;
                j["m_max"] = triple_mmax;
                j["triples"] = count;
                j["platonic_triples"] = platonic_count;
                j["all_equivalences_agree"] = agree;
                if (triple_json) {
                    out << j.dump(2) << "\n";
                } else {
                    out << "sweep over 2 <= p <= q <= r <= " << rmax << ": " << count
                        << " triples, " << platonic_count << " Platonic\n";
                    out << "all equivalences agree: " << yesno(agree) << "\n";
                }
                return agree ? 0 : 1;
            }
            if (triple_pqr.size() != 3)
                throw std::invalid_argument("triple: exactly three exponents required");
            auto t = brieskorn::classify_triple(triple_pqr[0], triple_pqr[1],
                                                triple_pqr[2], triple_mmax);
            json j;
            j["schema"] = "singclass/1";
            j["command"] = "triple";
            j["triple"] = t.triple;
            j["platonic"] = t.platonic;
            j["platonic_type"] = brieskorn::to_string(t.platonic_type);
            j["N"] = big(t.normal_degree);
            j["rational"] = t.is_rational;
            j["quotient"] = t.is_quotient;
            j["quasirational"] = t.quasirational;
            j["quasirational_cross_check"] = t.quasirational_cross_check;
            j["log_kodaira"] = kodaira_json(t.log_kodaira);
            j["admits_cplus"] = t.admits_cplus;
            j["gorenstein"] = t.is_gorenstein;
            j["isolated_singularity_assumed"] =
                t.ci_report.isolated_singularity_assumed;
            j["m_max"] = triple_mmax;
            j["delta"] = big_list(t.ci_report.delta);
            j["pbar"] = big_list(t.ci_report.pbar);
            if (triple_json) {
                out << j.dump(2) << "\n";
            } else {
                out << "triple: (" << t.triple[0] << ", " << t.triple[1] << ", "
                    << t.triple[2] << ")\n";
                out << "Platonic: "
                    << (t.platonic ? brieskorn::to_string(t.platonic_type) : "no")
                    << "\n";
                out << "N = " << t.normal_degree << "\n";
                out << "rational: " << yesno(t.is_rational) << "\n";
                out << "quotient: " << yesno(t.is_quotient) << "\n";
                out << "quasirational: " << yesno(t.quasirational) << "\n";
                out << "quasirational cross-check: "
                    << yesno(t.quasirational_cross_check) << "\n";
                out << "log Kodaira dimension: " << t.log_kodaira.str() << "\n";
                out << "admits C+ action: " << yesno(t.admits_cplus) << "\n";
                out << "Gorenstein: " << yesno(t.is_gorenstein) << "\n";
                out << "delta[1.." << triple_mmax
                    << "]: " << join_Int(t.ci_report.delta) << "\n";
                out << "pbar[1.." << triple_mmax
                    << "]: " << join_Int(t.ci_report.pbar) << "\n";
            }
            return 0;
        }

        // ---------------- ci ----------------
        if (*cmd_ci) {
            std::vector<long long> weights = parse_ll_list(ci_weights, "weights");
            std::vector<long long> degrees;
            if (!ci_degrees.empty()) degrees = parse_ll_list(ci_degrees, "degrees");
            hilbert::WeightedCI ci(weights, degrees);
            auto rep = hilbert::classify_ci(ci, ci_mmax);
            json j;
            j["schema"] = "singclass/1";
            j["command"] = "ci";
            j["weights"] = weights;
            j["degrees"] = degrees;
            j["dim"] = ci.dimension();
            j["codim"] = ci.codimension();
            j["N"] = big(rep.normal_degree);
            j["rational"] = rep.is_rational;
            j["log_kodaira"] = kodaira_json(rep.log_kodaira);
            j["isolated_singularity_assumed"] = rep.isolated_singularity_assumed;
            j["m_max"] = ci_mmax;
            j["delta"] = big_list(rep.delta);
            j["pbar"] = big_list(rep.pbar);
            if (rep.is_quotient_surface) j["quotient"] = *rep.is_quotient_surface;
            if (rep.quasirational_form_test)
                j["quasirational_form_test"] = *rep.quasirational_form_test;
            if (ci_json) {
                out << j.dump(2) << "\n";
            } else {
                out << "complete intersection: weights (";
                for (std::size_t i = 0; i < weights.size(); ++i)
                    out << (i ? ", " : "") << weights[i];
                out << "), degrees (";
                for (std::size_t i = 0; i < degrees.size(); ++i)
                    out << (i ? ", " : "") << degrees[i];
                out << ")\n";
                out << "dim V = " << ci.dimension() << ", codim = "
                    << ci.codimension() << "\n";
                out << "N = " << rep.normal_degree << "\n";
                out << "rational: " << yesno(rep.is_rational) << "\n";
                out << "log Kodaira dimension: " << rep.log_kodaira.str() << "\n";
                if (rep.is_quotient_surface)
                    out << "quotient: " << yesno(*rep.is_quotient_surface) << "\n";
                if (rep.quasirational_form_test)
                    out << "quasirational form test (dim A_N = 0): "
                        << yesno(*rep.quasirational_form_test) << "\n";
                out << "delta[1.." << ci_mmax << "]: " << join_Int(rep.delta) << "\n";
                out << "pbar[1.." << ci_mmax << "]: " << join_Int(rep.pbar) << "\n";
            }
            return 0;
        }

        // ---------------- veronese ----------------
        if (*cmd_ver) {
            auto ci = brieskorn::triple_ci(ver_pqr[0], ver_pqr[1], ver_pqr[2]);
            auto rep = hilbert::veronese_analysis(ci, ver_d, ver_mmax);
            json j;
            j["schema"] = "singclass/1";
            j["command"] = "veronese";
            j["triple"] = ver_pqr;
            j["quotient_degree"] = ver_d;
            j["N"] = big(rep.normal_degree);
            j["rational"] = rep.is_rational;
            j["quotient"] = rep.is_quotient;
            j["log_kodaira"] = kodaira_json(rep.log_kodaira);
            if (rep.min_rational_veronese_degree)
                j["min_rational_quotient_degree"] = *rep.min_rational_veronese_degree;
            j["m_max"] = ver_mmax;
            j["delta"] = big_list(rep.delta);
            j["pbar"] = big_list(rep.pbar);
            if (ver_json) {
                out << j.dump(2) << "\n";
            } else {
                out << "Veronese quotient: triple (" << ver_pqr[0] << ", "
                    << ver_pqr[1] << ", " << ver_pqr[2] << "), quotient degree "
                    << ver_d << "\n";
                out << "N = " << rep.normal_degree << "\n";
                out << "rational: " << yesno(rep.is_rational) << "\n";
                out << "quotient: " << yesno(rep.is_quotient) << "\n";
                out << "log Kodaira dimension: " << rep.log_kodaira.str() << "\n";
                if (rep.min_rational_veronese_degree)
                    out << "minimal rational quotient degree: "
                        << *rep.min_rational_veronese_degree << "\n";
                else
                    out << "minimal rational quotient degree: none\n";
                out << "delta_W[1.." << ver_mmax << "]: " << join_Int(rep.delta)
                    << "\n";
                out << "pbar_W[1.." << ver_mmax << "]: " << join_Int(rep.pbar)
                    << "\n";
            }
            return 0;
        }

        // ---------------- hypersurface ----------------
        if (*cmd_hyp) {
            auto exps = parse_ll_list(hyp_exps, "exponents");
            auto rep = brieskorn::classify_fermat_hypersurface(exps);
            json j;
            j["schema"] = "singclass/1";
            j["command"] = "hypersurface";
            j["exponents"] = rep.exponents;
            j["N"] = big(rep.normal_degree);
            j["rational"] = rep.is_rational;
            j["steinbrink_no_coprime_solutions"] = rep.steinbrink_no_coprime_solutions;
            if (hyp_json) {
                out << j.dump(2) << "\n";
            } else {
                out << "Fermat hypersurface: exponents (";
                for (std::size_t i = 0; i < rep.exponents.size(); ++i)
                    out << (i ? ", " : "") << rep.exponents[i];
                out << ")\n";
                out << "N = " << rep.normal_degree << "\n";
                out << "rational: " << yesno(rep.is_rational) << "\n";
                out << "no coprime polynomial solutions (Steinbrink bound): "
                    << yesno(rep.steinbrink_no_coprime_solutions) << "\n";
            }
            return 0;
        }

        // ---------------- cone ----------------
        if (*cmd_cone) {
            std::optional<Poly> form;
            if (!cone_form.empty()) {
                std::vector<std::string> xy{"x", "y"};
                Poly f(xy);
                std::vector<std::string> items;
                std::stringstream ss(cone_form);
                std::string item;
                while (std::getline(ss, item, ',')) items.push_back(item);
                if (static_cast<long long>(items.size()) != cone_d + 1)
                    throw std::invalid_argument(
                        "cone: --form needs exactly d+1 coefficients");
                for (long long i = 0; i <= cone_d; ++i)
                    f = f + Poly::monomial(xy, {cone_d - i, i},
                                           parse_scalar(items[static_cast<std::size_t>(i)]));
                if (f.is_zero())
                    throw std::invalid_argument("cone: F must be nonzero");
                form = f;
            }
            auto rep = brieskorn::classify_cone_surface(cone_d, cone_m, form);
            json j;
            j["schema"] = "singclass/1";
            j["command"] = "cone";
            j["d"] = rep.form_degree;
            j["m"] = rep.z_exponent;
            j["N"] = big(rep.normal_degree);
            j["solutions_exist"] = rep.solutions_exist;
            j["quasirational"] = rep.quasirational;
            j["squarefree_checked"] = rep.squarefree_checked;
            if (rep.squarefree) j["squarefree"] = *rep.squarefree;
            if (form) j["form"] = form->str();
            if (cone_json) {
                out << j.dump(2) << "\n";
            } else {
                out << "cone surface F_d(x, y) = z^m: d = " << rep.form_degree
                    << ", m = " << rep.z_exponent << "\n";
                if (form) out << "F = " << form->str() << "\n";
                out << "N = " << rep.normal_degree << "\n";
                out << "polynomial solutions in coprime polynomials: "
                    << yesno(rep.solutions_exist) << "\n";
                out << "quasirational: " << yesno(rep.quasirational) << "\n";
                if (rep.squarefree_checked)
                    out << "square-free: " << yesno(*rep.squarefree) << "\n";
            }
            return 0;
        }

        // ---------------- schwartz ----------------
        if (*cmd_schwartz) {
            std::vector<curves::WeightedFermatIdentity> ids;
            if (schwartz_name == "all") {
                for (long long d = 2; d <= 50; ++d)
                    ids.push_back(curves::dihedral_identity(d));
                ids.push_back(curves::tetrahedral_identity());
                ids.push_back(curves::octahedral_identity());
                ids.push_back(curves::octahedral_variant_identity());
                ids.push_back(curves::icosahedral_identity());
            } else {
                auto id = curves::identity_by_name(schwartz_name);
                if (!id)
                    throw std::invalid_argument("schwartz: unknown identity '" +
                                                schwartz_name + "'");
                ids.push_back(*id);
            }
            bool all_hold = true;
            json reports = json::array();
            std::ostringstream text;
            for (const auto& id : ids) {
                auto r = curves::verify_identity(id);
                all_hold = all_hold && r.holds;
                reports.push_back(schwartz_report_json(id, r));
                schwartz_report_text(text, id, r);
                text << "\n";
            }
            json j;
            j["schema"] = "singclass/1";
            j["command"] = "schwartz";
            j["identities"] = reports;
            j["all_hold"] = all_hold;
            if (schwartz_json)
                out << j.dump(2) << "\n";
            else
                out << text.str();
            return all_hold ? 0 : 1;
        }

        // ---------------- trivial ----------------
        if (*cmd_trivial) {
            auto exps = parse_ll_list(trivial_exps, "exponents");
            if (exps.size() != 3)
                throw std::invalid_argument("trivial: exactly three exponents required");
            std::vector<std::string> items;
            std::stringstream ss(trivial_consts);
            std::string item;
            while (std::getline(ss, item, ',')) items.push_back(item);
            if (items.size() != 3)
                throw std::invalid_argument("trivial: exactly three constants required");
            std::array<Scalar, 3> consts{parse_scalar(items[0]),
                                         parse_scalar(items[1]),
                                         parse_scalar(items[2])};
            Poly f = parse_poly(trivial_f);
            auto comps = curves::build_trivial(
                consts, f, {exps[0], exps[1], exps[2]});
            auto r = curves::check_solution(comps);
            long long m = std::lcm(std::lcm(exps[0], exps[1]), exps[2]);
            json j;
            j["schema"] = "singclass/1";
            j["command"] = "trivial";
            j["exponents"] = exps;
            j["lcm"] = m;
            j["f"] = f.str();
            json comps_j = json::array();
            for (const auto& c : comps)
                comps_j.push_back({{"constant", c.constant.str()},
                                   {"polynomial", c.polynomial.str()},
                                   {"exponent", c.exponent}});
            j["components"] = comps_j;
            j["holds"] = r.holds;
            j["pairwise_coprime"] = r.pairwise_coprime;
            j["any_component_constant"] = r.any_component_constant;
            if (trivial_json) {
                out << j.dump(2) << "\n";
            } else {
                out << "trivial solution: exponents (" << exps[0] << ", " << exps[1]
                    << ", " << exps[2] << "), lcm = " << m << "\n";
                out << "f = " << f.str() << "\n";
                for (const auto& c : comps)
                    out << "  " << c.constant.str() << " * (" << c.polynomial.str()
                        << ")^" << c.exponent << "\n";
                out << "holds: " << yesno(r.holds) << "\n";
                out << "pairwise coprime: " << yesno(r.pairwise_coprime[0]) << " "
                    << yesno(r.pairwise_coprime[1]) << " "
                    << yesno(r.pairwise_coprime[2]) << "\n";
            }
            return 0;
        }

        // ---------------- cyclic ----------------
        if (*cmd_cyclic) {
            quotients::CyclicQuotientData q(cyc_d, cyc_e);
            auto hj = quotients::hj_expansion(q);
            auto gens = quotients::invariant_generators(q);
            bool gor = quotients::is_gorenstein(q);
            auto dd = quotients::descend_lnd(q);
            json j;
            j["schema"] = "singclass/1";
            j["command"] = "cyclic";
            j["order"] = cyc_d;
            j["twist"] = cyc_e;
            j["hj_string"] = hj;
            json gens_j = json::array();
            for (const auto& [a, b] : gens) gens_j.push_back({a, b});
            j["generators"] = gens_j;
            j["gorenstein"] = gor;
            json der = json::array();
            for (const auto& im : dd.images) {
                json e;
                e["generator"] = {im.generator.first, im.generator.second};
                if (im.image_monomial)
                    e["image"] = std::to_string(im.coefficient) + "*" +
                                 monomial_xy(im.image_monomial->first,
                                             im.image_monomial->second);
                else
                    e["image"] = "0";
                e["invariant"] = im.image_invariant;
                der.push_back(e);
            }
            j["derivation"] = der;
            j["all_images_invariant"] = dd.all_images_invariant;
            if (dd.presentation) {
                json p = derivation_json(*dd.presentation);
                if (dd.presented_relation) {
                    p["relation"] = dd.presented_relation->str();
                    p["relation_annihilated"] = *dd.relation_annihilated;
                }
                j["presentation"] = p;
            }
            if (cyc_json) {
                out << j.dump(2) << "\n";
            } else {
                out << "cyclic quotient: order " << cyc_d << ", twist " << cyc_e
                    << "  (action (x, y) -> (zeta*x, zeta^" << cyc_e << "*y))\n";
                out << "HJ string: [";
                for (std::size_t i = 0; i < hj.size(); ++i)
                    out << (i ? ", " : "") << hj[i];
                out << "]\n";
                out << "invariant generators:";
                for (const auto& [a, b] : gens)
                    out << " " << monomial_xy(a, b);
                out << "\n";
                out << "Gorenstein: " << yesno(gor) << "\n";
                out << "descended derivation (d(X) = 0, d(Y) = X^" << cyc_e << "):\n";
                for (const auto& im : dd.images) {
                    out << "  " << monomial_xy(im.generator.first, im.generator.second)
                        << " -> ";
                    if (im.image_monomial)
                        out << im.coefficient << "*"
                            << monomial_xy(im.image_monomial->first,
                                           im.image_monomial->second);
                    else
                        out << "0";
                    out << "\n";
                }
                out << "all images invariant: " << yesno(dd.all_images_invariant)
                    << "\n";
                if (dd.presentation) {
                    out << "presentation on generator coordinates:\n";
                    print_derivation(out, *dd.presentation);
                    if (dd.presented_relation)
                        out << "relation " << dd.presented_relation->str()
                            << " annihilated: " << yesno(*dd.relation_annihilated)
                            << "\n";
                }
            }
            return 0;
        }

        // ---------------- lnd verify ----------------
        if (*cmd_lnd_verify) {
            auto d = parse_derivation(read_file(lv_file));
            long long cap = lv_cap > 0 ? lv_cap : lnd::default_cap(d);
            auto v = lnd::is_locally_nilpotent(d, cap);
            json j;
            j["schema"] = "singclass/1";
            j["command"] = "lnd-verify";
            j["derivation"] = derivation_json(d);
            j["verdict"] = verdict_json(v, d.vars());
            std::ostringstream text;
            text << "derivation on (";
            for (std::size_t i = 0; i < d.vars().size(); ++i)
                text << (i ? ", " : "") << d.vars()[i];
            text << "):\n";
            print_derivation(text, d);
            text << "cap: " << cap << "\n";
            text << "status: " << lnd::to_string(v.status) << "\n";
            text << "vanishing steps:";
            for (std::size_t i = 0; i < d.vars().size(); ++i) {
                text << " " << d.vars()[i] << ":";
                if (v.vanishing_steps[i] >= 0)
                    text << v.vanishing_steps[i];
                else
                    text << "-";
            }
            text << "\n";
            if (!lv_weights.empty()) {
                auto w = parse_ll_list(lv_weights, "weights");
                auto parts = lnd::homogeneous_parts(d, w);
                json pj = json::array();
                text << "homogeneous parts (weights";
                for (long long x : w) text << " " << x;
                text << "):\n";
                for (const auto& [deg, part] : parts) {
                    auto pv = lnd::is_locally_nilpotent(part, cap);
                    json e;
                    e["degree"] = deg;
                    e["derivation"] = derivation_json(part);
                    e["verdict"] = verdict_json(pv, part.vars());
                    pj.push_back(e);
                    text << "  degree " << deg << ": "
                         << lnd::to_string(pv.status) << "\n";
                }
                j["homogeneous_parts"] = pj;
            }
            if (lv_json)
                out << j.dump(2) << "\n";
            else
                out << text.str();
            return v.status == lnd::NilpotencyStatus::nilpotent ? 0 : 1;
        }

        // ---------------- lnd flow ----------------
        if (*cmd_lnd_flow) {
            auto d = parse_derivation(read_file(lf_file));
            long long cap = lf_cap > 0 ? lf_cap : lnd::default_cap(d);
            auto flow = lnd::exp_flow(d, cap, lf_param);
            json j;
            j["schema"] = "singclass/1";
            j["command"] = "lnd-flow";
            j["derivation"] = derivation_json(d);
            j["parameter"] = flow.parameter;
            json imgs = json::object();
            for (std::size_t i = 0; i < flow.vars.size(); ++i)
                imgs[flow.vars[i]] = flow.images[i].str();
            j["flow"] = imgs;
            if (lf_json) {
                out << j.dump(2) << "\n";
            } else {
                out << "flow with parameter " << flow.parameter << ":\n";
                for (std::size_t i = 0; i < flow.vars.size(); ++i)
                    out << "  " << flow.vars[i] << " -> " << flow.images[i].str()
                        << "\n";
            }
            return 0;
        }

        // ---------------- lnd suspend ----------------
        if (*cmd_lnd_suspend) {
            Poly p = ls_vars.empty()
                         ? parse_poly(ls_p)
                         : parse_poly(ls_p, [&] {
                               std::vector<std::string> v;
                               std::stringstream ss(ls_vars);
                               std::string item;
                               while (std::getline(ss, item, ',')) v.push_back(item);
                               return v;
                           }());
            auto [d, rel] = lnd::build_suspension(p);
            bool annihilated = d.apply(rel).is_zero();
            long long cap = ls_cap > 0 ? ls_cap : lnd::default_cap(d);
            auto v = lnd::is_locally_nilpotent(d, cap);
            json j;
            j["schema"] = "singclass/1";
            j["command"] = "lnd-suspend";
            j["p"] = p.str();
            j["derivation"] = derivation_json(d);
            j["relation"] = rel.str();
            j["relation_annihilated"] = annihilated;
            j["verdict"] = verdict_json(v, d.vars());
            std::ostringstream text;
            text << "suspension of p = " << p.str() << "\n";
            print_derivation(text, d);
            text << "relation: " << rel.str() << "\n";
            text << "relation annihilated: " << yesno(annihilated) << "\n";
            text << "status: " << lnd::to_string(v.status) << "\n";
            if (v.status == lnd::NilpotencyStatus::nilpotent) {
                auto flow = lnd::exp_flow(d, cap);
                j["parameter"] = flow.parameter;
                json imgs = json::object();
                for (std::size_t i = 0; i < flow.vars.size(); ++i)
                    imgs[flow.vars[i]] = flow.images[i].str();
                j["flow"] = imgs;
                text << "flow with parameter " << flow.parameter << ":\n";
                for (std::size_t i = 0; i < flow.vars.size(); ++i)
                    text << "  " << flow.vars[i] << " -> " << flow.images[i].str()
                         << "\n";
            }
            if (ls_json)
                out << j.dump(2) << "\n";
            else
                out << text.str();
            return 0;
        }

        err << "no subcommand selected\n";
        return 2;
    } catch (const parse_error& e) {
        err << "parse error at byte " << e.offset << ": " << e.what() << "\n";
        return 2;
    } catch (const ring_mismatch& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const inexact_division& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(std::move(args), out, err);
}

}  // namespace singclass::cli
