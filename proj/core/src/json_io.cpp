#include "ramsey/json_io.hpp"

namespace ramsey {

using nlohmann::json;

namespace {

json monomials_to_json(const std::vector<Monomial>& terms) {
    json out = json::array();
    for (const auto& m : terms) {
        json exps = json::object();
        for (const auto& [v, e] : m.exps)
            exps[v.name()] = e;
        out.push_back({{"coeff", m.coeff.str()}, {"exps", exps}});
    }
    return out;
}

std::vector<Monomial> monomials_from_json(const json& j) {
    std::vector<Monomial> out;
    for (const auto& jm : j) {
        Monomial m;
        m.coeff = Rational::parse(jm.at("coeff").get<std::string>());
        for (const auto& [name, e] : jm.at("exps").items())
            m.exps[VarId(name)] = e.get<unsigned>();
        out.push_back(std::move(m));
    }
    return out;
}

} // namespace

json equation_to_json(const Equation& eq) {
    return json{{"terms", monomials_to_json(eq.terms())}, {"text", eq.str()}};
}

Equation equation_from_json(const json& j) {
    Polynomial p = Polynomial::from_monomials(monomials_from_json(j.at("terms")));
    if (p.is_zero())
        throw Error(ErrorKind::EmptyEquation, "zero polynomial in JSON equation");
    return Equation(std::move(p));
}

json pattern_to_json(const PatternSpec& spec) {
    json vars = json::array();
    for (const auto& v : spec.free_vars)
        vars.push_back(v.name());
    json terms = json::array();
    for (const auto& t : spec.terms)
        terms.push_back(monomials_to_json(t.terms()));
    json constraints = json::array();
    for (const auto& c : spec.constraints) {
        if (const auto* pos = std::get_if<Positivity>(&c))
            constraints.push_back({{"kind", "positive"}, {"term", monomials_to_json(pos->term.terms())}});
        else if (const auto* d = std::get_if<Distinct>(&c))
            constraints.push_back({{"kind", "distinct"},
                                   {"a", monomials_to_json(d->a.terms())},
                                   {"b", monomials_to_json(d->b.terms())}});
        else if (const auto* dv = std::get_if<Divides>(&c))
            constraints.push_back({{"kind", "divides"}, {"k", int_str(dv->k)}, {"var", dv->var.name()}});
    }
    return json{{"free_vars", vars}, {"terms", terms}, {"constraints", constraints}, {"text", spec.str()}};
}

PatternSpec pattern_from_json(const json& j) {
    PatternSpec spec;
    for (const auto& v : j.at("free_vars"))
        spec.free_vars.emplace_back(v.get<std::string>());
    for (const auto& t : j.at("terms"))
        spec.terms.push_back(Polynomial::from_monomials(monomials_from_json(t)));
    if (j.contains("constraints")) {
        for (const auto& c : j.at("constraints")) {
            std::string kind = c.at("kind").get<std::string>();
            if (kind == "positive")
                spec.constraints.push_back(
                    Positivity{Polynomial::from_monomials(monomials_from_json(c.at("term")))});
            else if (kind == "distinct")
                spec.constraints.push_back(
                    Distinct{Polynomial::from_monomials(monomials_from_json(c.at("a"))),
                             Polynomial::from_monomials(monomials_from_json(c.at("b")))});
            else if (kind == "divides")
                spec.constraints.push_back(Divides{Int(c.at("k").get<std::string>()),
                                                   VarId(c.at("var").get<std::string>())});
            else
                throw Error(ErrorKind::FormatError, "unknown constraint kind '" + kind + "'");
        }
    }
    spec.validate();
    return spec;
}

json certificate_to_json(const ObstructionReport& report) {
    json out{
        {"equation", equation_to_json(report.equation)},
        {"p", int_str(report.p)},
        {"modulus", report.modulus},
        {"outcome", report.obstructed ? "obstructed" : "collision"},
        {"residue_table", report.residue_table},
    };
    if (!report.obstructed)
        out["collision"] = {{"color", report.collision_color},
                            {"term_a", report.collision_term_a},
                            {"term_b", report.collision_term_b}};
    return out;
}

json witness_to_json(const WitnessReport& report) {
    json assignment = json::object();
    for (const auto& [v, val] : report.assignment)
        assignment[v.name()] = val.str();
    json out{
        {"equation", report.target.str()},
        {"assignment", assignment},
        {"residual", report.residual.str()},
        {"valid", report.valid},
        {"integral", report.integral},
    };
    if (report.color_checked)
        out["monochromatic"] = report.mono_color.has_value();
    if (report.mono_color)
        out["color"] = *report.mono_color;
    return out;
}

json counterexample_to_json(const Counterexample& cex) {
    json assignment = json::object();
    for (const auto& [v, val] : cex.assignment)
        assignment[v.name()] = int_str(val);
    json values = json::array();
    for (const auto& v : cex.term_values)
        values.push_back(int_str(v));
    return json{{"assignment", assignment}, {"term_values", values}, {"color", cex.color}};
}

json coloring_to_json(const Coloring& coloring) {
    json table = json::array();
    for (long x = 1; x <= coloring.domain_size(); ++x)
        table.push_back(coloring.color(x));
    json out{{"n", coloring.domain_size()}, {"colors", coloring.colors()}, {"table", table}};
    if (coloring.is_padic_rule()) {
        out["rule"] = {{"p", int_str(coloring.p())}, {"modulus", coloring.modulus()}};
    }
    return out;
}

json varmap_to_json(const CnfInstance& cnf) {
    json map = json::array();
    for (long i = 1; i <= cnf.n; ++i) {
        if (cnf.colors == 2) {
            map.push_back({{"value", i}, {"color", 1}, {"var", cnf.var_of(i, 1)}});
        } else {
            for (int c = 0; c < cnf.colors; ++c)
                map.push_back({{"value", i}, {"color", c}, {"var", cnf.var_of(i, c)}});
        }
    }
    return json{{"n", cnf.n},
                {"colors", cnf.colors},
                {"num_vars", cnf.num_vars},
                {"num_clauses", cnf.clauses.size()},
                {"encoding", cnf.colors == 2 ? "direct" : "one-hot"},
                {"map", map}};
}

} // namespace ramsey
