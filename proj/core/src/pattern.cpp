#include "ramsey/pattern.hpp"

namespace ramsey {

namespace {

void require_declared(const PatternSpec& spec, const Polynomial& p) {
    for (const auto& v : p.variables()) {
        bool found = false;
        for (const auto& f : spec.free_vars)
            if (f == v) {
                found = true;
                break;
            }
        if (!found)
            throw Error(ErrorKind::BadParameters, "variable '" + v.name() + "' is not declared free");
    }
}

} // namespace

void PatternSpec::validate() const {
    for (const auto& t : terms)
        require_declared(*this, t);
    for (const auto& c : constraints) {
        if (const auto* pos = std::get_if<Positivity>(&c)) {
            require_declared(*this, pos->term);
        } else if (const auto* d = std::get_if<Distinct>(&c)) {
            require_declared(*this, d->a);
            require_declared(*this, d->b);
        } else if (const auto* dv = std::get_if<Divides>(&c)) {
            if (dv->k < 1)
                throw Error(ErrorKind::BadParameters, "Divides requires k >= 1");
            bool found = false;
            for (const auto& f : free_vars)
                if (f == dv->var)
                    found = true;
            if (!found)
                throw Error(ErrorKind::BadParameters,
                            "variable '" + dv->var.name() + "' is not declared free");
        }
    }
}

std::string PatternSpec::str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i)
            out += ", ";
        out += terms[i].str();
    }
    std::string side;
    for (const auto& c : constraints) {
        if (!side.empty())
            side += ", ";
        if (const auto* pos = std::get_if<Positivity>(&c))
            side += pos->term.str() + " > 0";
        else if (const auto* d = std::get_if<Distinct>(&c))
            side += d->a.str() + " != " + d->b.str();
        else if (const auto* dv = std::get_if<Divides>(&c))
            side += int_str(dv->k) + " | " + dv->var.name();
    }
    if (!side.empty())
        out += " : " + side;
    out += "}";
    return out;
}

std::string target_str(const Target& t) {
    if (const auto* eq = std::get_if<Equation>(&t))
        return eq->str() + " = 0";
    return std::get<PatternSpec>(t).str();
}

} // namespace ramsey
