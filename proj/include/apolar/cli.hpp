#pragma once

// The `apolar` command line. run() is kept separate from main() so the golden
// tests can drive it in-process.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "apolar/apolarity.hpp"
#include "apolar/error.hpp"
#include "apolar/families.hpp"
#include "apolar/jacobian.hpp"
#include "apolar/multipoly.hpp"
#include "apolar/parser.hpp"
#include "apolar/serialize.hpp"

namespace apolar::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_domain = 2;

namespace detail {

struct Common {
    std::string vars;
    bool json = false;
};

inline void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--vars", c.vars, "comma-separated variable names (default: inferred from x,y,z,w,t)");
    sub->add_flag("--json", c.json, "emit JSON");
}

inline std::vector<std::string> split_vars(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    if (!s.empty() && out.empty()) throw InputError("--vars is empty");
    return out;
}

inline std::string read_matrix_argument(const std::string& arg) {
    std::ifstream in(arg);
    if (!in) return arg;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void print_poly(std::ostream& out, const Common& c, const MultiPoly& p, const std::vector<std::string>& vars) {
    if (c.json) out << poly_json(p, vars).dump(2) << '\n';
    else out << p.to_string(vars) << '\n';
}

inline std::string j_text(const Scalar& a, Scalar (*j)(const Scalar&)) {
    try {
        return j(a).to_string();
    } catch (const DomainError& e) {
        return std::string("undefined (") + e.what() + ")";
    }
}

}  // namespace detail

/// Runs one command line (args excludes the program name). Returns the exit code.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact apolarity, Hessian and Macaulay polynomials of hypersurfaces"};
    app.require_subcommand(1);
    detail::Common common;
    std::vector<std::string> positional;

    auto* c_hessian = app.add_subcommand("hessian", "determinant of the matrix of second partials");
    c_hessian->add_option("poly", positional, "form")->required()->expected(1);
    auto* c_jacobian = app.add_subcommand("jacobian", "generators of the Jacobian ideal");
    c_jacobian->add_option("poly", positional, "form")->required()->expected(1);
    unsigned perp_degree = 0;
    auto* c_perp = app.add_subcommand("perp", "bases of the apolar ideal's graded pieces");
    c_perp->add_option("poly", positional, "form")->required()->expected(1);
    auto* perp_degree_opt = c_perp->add_option("--degree", perp_degree, "only this degree");
    std::string hilbert_mode;
    auto* c_hilbert = app.add_subcommand("hilbert", "Hilbert function of R/J(g) or of T/f-perp");
    c_hilbert->add_option("poly", positional, "form")->required()->expected(1);
    c_hilbert->add_option("--mode", hilbert_mode, "jacobian or perp")
        ->required()
        ->check(CLI::IsMember({"jacobian", "perp"}));
    auto* c_macaulay = app.add_subcommand("macaulay", "dual socle generator of the Jacobian ring");
    c_macaulay->add_option("poly", positional, "form")->required()->expected(1);
    auto* c_apply = app.add_subcommand("apply", "differentiation action of an operator on a form");
    c_apply->add_option("operands", positional, "operator and form")->required()->expected(2);
    std::string matrix_arg;
    bool contragredient = false;
    auto* c_change = app.add_subcommand("change-vars", "substitute x -> A x");
    c_change->add_option("poly", positional, "form")->required()->expected(1);
    c_change->add_option("--matrix", matrix_arg, "file or inline rows, e.g. \"1 1 0; 0 1 0; 0 0 1\"")->required();
    c_change->add_flag("--contragredient", contragredient, "use the inverse transpose of A");
    std::string family_name, param_text;
    bool family_report = false;
    auto* c_family = app.add_subcommand("family", "member of a named family");
    c_family->add_option("name", family_name, "hasse or binary-quartic")
        ->required()
        ->check(CLI::IsMember({"hasse", "binary-quartic"}));
    c_family->add_option("--param", param_text, "parameter a (rational, or sqrt(d) expression)")->required();
    c_family->add_flag("--report", family_report, "Hessian/Macaulay parameters and j-values");
    std::string classify_name;
    auto* c_classify = app.add_subcommand("classify", "Hessian/Macaulay equivalence classes (JSON)");
    c_classify->add_option("family", classify_name, "binary-quartics or hasse-cubics")
        ->required()
        ->check(CLI::IsMember({"binary-quartics", "hasse-cubics"}));

    for (auto* sub : {c_hessian, c_jacobian, c_perp, c_hilbert, c_macaulay, c_apply, c_change, c_family})
        detail::add_common(sub, common);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return exit_ok;
        }
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        std::vector<std::string> vars = detail::split_vars(common.vars);

        if (c_classify->parsed()) {
            const auto rep = classify_name == "binary-quartics" ? classify_binary_quartics() : classify_hasse_cubics();
            out << report_json(rep).dump(2) << '\n';
            return exit_ok;
        }

        if (c_family->parsed()) {
            const auto in = parse_polys({}, {"a"}, {param_text});
            const MultiPoly& pa = in.polys.front();
            if (pa.degree() > 0) throw InputError("--param must be a constant");
            const Scalar a = pa.is_zero() ? Scalar::zero(in.field) : pa.leading_coefficient();
            Json j{{"family", family_name}, {"param", a.to_string()}};
            std::vector<std::string> lines;
            if (family_name == "hasse") {
                if (vars.empty()) vars = {"x", "y", "z"};
                const Hypersurface h = hasse_cubic(a);
                j["member"] = poly_json(h.polynomial(), vars);
                lines.push_back("member: " + h.polynomial().to_string(vars));
                if (family_report) {
                    const MultiPoly hess = hessian(h), mac = macaulay(h);
                    std::string b = "infinity (x*y*z)", c = "infinity (x*y*z)";
                    std::string jb = "0", jc = "0";
                    if (!a.is_zero()) {
                        const Scalar bs = hasse_hessian_param(a), cs = hasse_macaulay_param(a);
                        b = bs.to_string();
                        c = cs.to_string();
                        jb = detail::j_text(bs, j_hasse);
                        jc = detail::j_text(cs, j_hasse);
                    }
                    const std::string jf = detail::j_text(a, j_hasse);
                    j["hessian"] = poly_json(hess, vars);
                    j["macaulay"] = poly_json(mac, vars);
                    j["hessian_param"] = b;
                    j["macaulay_param"] = c;
                    j["j"] = {{"family", jf}, {"hessian", jb}, {"macaulay", jc}};
                    j["hessian_equals_macaulay"] = equal_up_to_scalar(hess, mac);
                    lines.push_back("hessian: " + hess.to_string(vars));
                    lines.push_back("macaulay: " + mac.to_string(vars));
                    lines.push_back("hessian_param: " + b);
                    lines.push_back("macaulay_param: " + c);
                    lines.push_back("j: " + jf);
                    lines.push_back("j_hessian: " + jb);
                    lines.push_back("j_macaulay: " + jc);
                }
            } else {
                if (vars.empty()) vars = {"x", "y"};
                const Hypersurface h = binary_quartic(a);
                j["member"] = poly_json(h.polynomial(), vars);
                lines.push_back("member: " + h.polynomial().to_string(vars));
                if (family_report) {
                    const MultiPoly hess = hessian(h), mac = macaulay(h);
                    auto jt = [](const MultiPoly& q) {
                        try {
                            return j_binary_quartic(q).to_string();
                        } catch (const DomainError& e) {
                            return std::string("undefined (") + e.what() + ")";
                        }
                    };
                    const std::string jf = jt(h.polynomial()), jh = jt(hess), jm = jt(mac);
                    j["hessian"] = poly_json(hess, vars);
                    j["macaulay"] = poly_json(mac, vars);
                    j["j"] = {{"family", jf}, {"hessian", jh}, {"macaulay", jm}};
                    j["hessian_equals_macaulay"] = equal_up_to_scalar(hess, mac);
                    lines.push_back("hessian: " + hess.to_string(vars));
                    lines.push_back("macaulay: " + mac.to_string(vars));
                    lines.push_back("j: " + jf);
                    lines.push_back("j_hessian: " + jh);
                    lines.push_back("j_macaulay: " + jm);
                }
            }
            if (common.json) out << j.dump(2) << '\n';
            else
                for (const auto& l : lines) out << l << '\n';
            return exit_ok;
        }

        if (c_change->parsed()) {
            const auto rows = split_matrix_text(detail::read_matrix_argument(matrix_arg));
            std::vector<std::string> entries;
            for (const auto& r : rows) entries.insert(entries.end(), r.begin(), r.end());
            const auto in = parse_polys(positional, vars, entries);
            const std::size_t n = rows.size();
            if (n != in.vars.size())
                throw ArityMismatch("matrix is " + std::to_string(n) + "x" + std::to_string(n) + " but the ring has " +
                                    std::to_string(in.vars.size()) + " variables");
            Matrix<Scalar> m(n, n, Scalar::zero(in.field));
            for (std::size_t k = 0; k < n * n; ++k) {
                const MultiPoly& e = in.polys[1 + k];
                if (e.degree() > 0) throw InputError("matrix entries must be constants");
                if (!e.is_zero()) m(k / n, k % n) = e.leading_coefficient();
            }
            LinearChange a(m);
            if (contragredient) a = a.contragredient();
            detail::print_poly(out, common, substitute_linear(in.polys[0], a), in.vars);
            return exit_ok;
        }

        const auto in = parse_polys(positional, vars);
        const auto& p = in.polys.front();

        if (c_apply->parsed()) {
            detail::print_poly(out, common, contract(in.polys[0], in.polys[1]), in.vars);
            return exit_ok;
        }
        if (c_perp->parsed()) {
            if (p.is_zero()) throw ZeroPolynomial("apolar ideal of the zero form");
            if (!p.is_homogeneous()) throw NotHomogeneous("form must be homogeneous");
            const unsigned j = static_cast<unsigned>(p.degree());
            unsigned lo = 1, hi = j;
            if (!perp_degree_opt->empty()) lo = hi = perp_degree;
            Json comps = Json::array();
            for (unsigned d = lo; d <= hi; ++d) {
                const auto slice = apolar_component(p, d);
                Json basis = Json::array();
                if (!common.json) out << "degree " << d << " (dimension " << slice.dimension() << "):\n";
                for (const auto& g : slice.span()) {
                    if (common.json) basis.push_back(poly_json(g, in.vars));
                    else out << "  " << g.to_string(in.vars) << '\n';
                }
                comps.push_back({{"degree", d}, {"dimension", slice.dimension()}, {"basis", basis}});
            }
            if (common.json) out << Json{{"components", comps}}.dump(2) << '\n';
            return exit_ok;
        }
        if (c_hilbert->parsed()) {
            HilbertFunction h;
            bool artinian = true;
            if (hilbert_mode == "perp") {
                h = apolar_hilbert(p);
            } else {
                const Hypersurface g(p);
                h = jacobian_hilbert(g);
                artinian = h(g.socle_degree() + 1) == 0;
                if (artinian) h = h.trimmed();
            }
            if (common.json) {
                out << Json{{"mode", hilbert_mode}, {"values", hilbert_json(h)}, {"artinian", artinian}}.dump(2)
                    << '\n';
            } else {
                out << h.to_string() << (artinian ? "" : " ...") << '\n';
            }
            return exit_ok;
        }

        const Hypersurface g(p);
        if (c_hessian->parsed()) {
            detail::print_poly(out, common, hessian(g), in.vars);
        } else if (c_macaulay->parsed()) {
            detail::print_poly(out, common, macaulay(g), in.vars);
        } else if (c_jacobian->parsed()) {
            const auto gens = jacobian_ideal(g);
            if (common.json) {
                Json a = Json::array();
                for (const auto& q : gens) a.push_back(poly_json(q, in.vars));
                out << Json{{"generators", a}}.dump(2) << '\n';
            } else {
                for (const auto& q : gens) out << q.to_string(in.vars) << '\n';
            }
        }
        return exit_ok;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return exit_domain;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return exit_usage;
    }
}

}  // namespace apolar::cli
