#pragma once

// JSON views of library objects (schema in README.md).

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "apolar/apolarity.hpp"
#include "apolar/families.hpp"
#include "apolar/multipoly.hpp"
#include "apolar/number_field.hpp"
#include "apolar/univariate.hpp"

namespace apolar {

using Json = nlohmann::ordered_json;

inline Json field_json(const FieldRef& f) {
    if (!f) return Json{{"name", "QQ"}};
    return Json{{"name", "QQ(" + f->symbol() + ")"},
                {"symbol", f->symbol()},
                {"minimal_polynomial", f->minimal_polynomial().to_string("t")}};
}

inline Json poly_json(const MultiPoly& p, const std::vector<std::string>& vars) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"exponent", e}, {"coefficient", c.to_string()}});
    return Json{{"variables", vars}, {"field", field_json(p.field())}, {"terms", terms}, {"text", p.to_string(vars)}};
}

inline Json hilbert_json(const HilbertFunction& h) { return Json(h.values()); }

/// A number given by its minimal polynomial: the rational value when it is
/// linear, radicals for quadratics, otherwise the polynomial alone.
inline Json algebraic_values_json(const UniPoly& m, const std::string& var) {
    if (m.degree() == 1) return Json{{"value", Rational(-m.monic().coeff(0)).get_str()}};
    Json out{{"minimal_polynomial", m.to_string(var)}};
    if (m.degree() == 2) {
        try {
            const auto [r1, r2] = radical_roots_of_quadratic(m);
            out["values"] = {r1.to_string(), r2.to_string()};
        } catch (const DomainError&) {
        }
    }
    return out;
}

/// Distinct values as a list: one entry per rational root, one per residual factor.
inline Json value_set_json(const UniPoly& p, const std::string& var) {
    Json out = Json::array();
    if (p.degree() < 1) return out;
    const RootSet r = extract_roots(p);
    for (const auto& q : r.rational_roots) out.push_back(Json{{"value", q.value.get_str()}});
    for (const auto& f : r.residual_factors) out.push_back(algebraic_values_json(f.factor, var));
    return out;
}

inline Json root_set_json(const RootSet& r) {
    Json rational = Json::array(), residual = Json::array();
    for (const auto& q : r.rational_roots) rational.push_back({{"value", q.value.get_str()}, {"multiplicity", q.multiplicity}});
    for (const auto& f : r.residual_factors) {
        Json j{{"polynomial", f.factor.to_string("a")}, {"degree", f.factor.degree()}, {"multiplicity", f.multiplicity}};
        if (f.discriminant) j["discriminant"] = f.discriminant->get_str();
        residual.push_back(std::move(j));
    }
    return Json{{"leading", r.leading.get_str()},
                {"rational_roots", rational},
                {"residual_factors", residual},
                {"total_multiplicity", r.total_multiplicity()}};
}

inline Json report_json(const ClassificationReport& rep) {
    Json roots = Json::array();
    for (const auto& g : rep.groups) {
        const Json j_values{{"family", algebraic_values_json(g.j_family, "j")},
                            {"hessian", algebraic_values_json(g.j_hessian, "j")},
                            {"macaulay", algebraic_values_json(g.j_macaulay, "j")}};
        if (g.factor.degree() == 1) {
            roots.push_back({{"root", {{"value", Rational(-g.factor.coeff(0)).get_str()}}},
                             {"multiplicity", g.multiplicity},
                             {"j", j_values}});
            continue;
        }
        for (long k = 0; k < g.factor.degree(); ++k)
            roots.push_back({{"root", {{"polynomial", g.factor.to_string("a")}, {"which_root", k}}},
                             {"multiplicity", g.multiplicity},
                             {"j", j_values}});
    }
    Json specials = Json::array();
    for (const auto& s : rep.special_members) {
        Json param = s.factor.degree() == 1 ? Json{{"value", Rational(-s.factor.coeff(0)).get_str()}}
                                            : Json{{"polynomial", s.factor.to_string("a")}};
        specials.push_back({{"parameter", param},
                            {"note", s.note},
                            {"j_family", algebraic_values_json(s.j_family, "j")},
                            {"hessian_equals_macaulay", s.hessian_equals_macaulay},
                            {"hessian_singular", s.hessian_singular}});
    }
    Json excluded = Json::array();
    for (const auto& v : rep.context_excluded) excluded.push_back(v.get_str());
    Json out{{"family", rep.family},
             {"equation", rep.equation.to_string("a")},
             {"poles", rep.poles.to_string("a")},
             {"context_excluded", excluded},
             {"root_summary", root_set_json(rep.roots)},
             {"roots", roots},
             {"special_members", specials}};
    if (rep.equality_roots) {
        out["hessian_equals_macaulay"] = {{"equation", rep.equality_roots->reconstruct().to_string("a")},
                                          {"roots", value_set_json(rep.equality_roots->reconstruct(), "a")}};
    }
    out["class_j_values"] = value_set_json(rep.class_j_values, "j");
    out["class_count"] = rep.class_count();
    return out;
}

}  // namespace apolar
