#include "ramsey/family.hpp"

#include <algorithm>

#include "ramsey/valuation.hpp"

namespace ramsey {

Family family_from_string(std::string_view name) {
    std::string up(name);
    std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return std::toupper(c); });
    if (up == "MN") return Family::MN;
    if (up == "LN") return Family::LN;
    if (up == "GOLOWICH") return Family::Golowich;
    if (up == "AT") return Family::AT;
    if (up == "SCHUR") return Family::Schur;
    if (up == "MOREIRA") return Family::Moreira;
    if (up == "PYTH") return Family::Pyth;
    if (up == "VDW_AP") return Family::VdwAp;
    if (up == "BOWEN_FINITE") return Family::BowenFinite;
    throw Error(ErrorKind::BadParameters, "unknown family '" + std::string(name) + "'");
}

std::string family_to_string(Family f) {
    switch (f) {
    case Family::MN: return "MN";
    case Family::LN: return "LN";
    case Family::Golowich: return "GOLOWICH";
    case Family::AT: return "AT";
    case Family::Schur: return "SCHUR";
    case Family::Moreira: return "MOREIRA";
    case Family::Pyth: return "PYTH";
    case Family::VdwAp: return "VDW_AP";
    case Family::BowenFinite: return "BOWEN_FINITE";
    }
    return "?";
}

std::vector<Family> all_families() {
    return {Family::MN, Family::LN, Family::Golowich, Family::AT, Family::Schur,
            Family::Moreira, Family::Pyth, Family::VdwAp, Family::BowenFinite};
}

bool family_is_equation(Family f) {
    switch (f) {
    case Family::MN:
    case Family::LN:
    case Family::Golowich:
    case Family::AT:
    case Family::Pyth:
        return true;
    default:
        return false;
    }
}

std::string family_parameter_help(Family f) {
    switch (f) {
    case Family::MN: return "p (prime), m >= 1, n >= 2";
    case Family::LN: return "a >= 2, n >= 2, c (positive rational)";
    case Family::Golowich: return "n >= 2";
    case Family::AT: return "n >= 2";
    case Family::Schur: return "(none)";
    case Family::Moreira: return "(none)";
    case Family::Pyth: return "(none)";
    case Family::VdwAp: return "l >= 3";
    case Family::BowenFinite: return "a >= 1 (|A|), b >= 1 (|B|)";
    }
    return "";
}

namespace {

class Params {
public:
    Params(const FamilySpec& spec, std::initializer_list<const char*> allowed) : spec_(spec) {
        for (const auto& [k, v] : spec.params) {
            bool ok = false;
            for (const char* a : allowed)
                if (k == a)
                    ok = true;
            if (!ok)
                throw Error(ErrorKind::BadParameters, family_to_string(spec.family) +
                                                          " does not take parameter '" + k + "'");
        }
    }

    Rational rational(const std::string& key) const {
        auto it = spec_.params.find(key);
        if (it == spec_.params.end())
            throw Error(ErrorKind::BadParameters,
                        family_to_string(spec_.family) + " requires parameter '" + key + "'");
        return it->second;
    }

    long natural(const std::string& key, long min) const {
        Rational r = rational(key);
        if (!r.is_integer())
            throw Error(ErrorKind::BadParameters, "parameter '" + key + "' must be an integer");
        Int v = r.as_integer();
        if (v < min || !v.fits_slong_p())
            throw Error(ErrorKind::BadParameters, "parameter '" + key + "' must be an integer >= " +
                                                      std::to_string(min) + ", got " + int_str(v));
        return v.get_si();
    }

private:
    const FamilySpec& spec_;
};

VarId xv(const std::string& base, long i) { return VarId(base + "_" + std::to_string(i)); }
VarId xv(const std::string& base, long i, long k) {
    return VarId(base + "_" + std::to_string(i) + "_" + std::to_string(k));
}

Equation make_mn(const FamilySpec& spec) {
    Params params(spec, {"p", "m", "n"});
    long m = params.natural("m", 1);
    long n = params.natural("n", 2);
    Rational pr = params.rational("p");
    if (!pr.is_positive_integer() || !is_prime(pr.as_integer()))
        throw Error(ErrorKind::BadParameters, "MN parameter p must be prime");
    Int p = pr.as_integer();

    std::vector<Monomial> out;
    for (long i = 1; i <= n - 1; ++i) {
        Monomial t;
        t.coeff = Rational(int_pow(p, static_cast<unsigned long>(m * i)));
        t.exps[xv("X", i, 1)] = 1;
        if (m >= 2)
            t.exps[xv("X", i, 2)] = static_cast<unsigned>(m - 1);
        out.push_back(std::move(t));
    }
    Monomial last;
    last.coeff = Rational(-1);
    if (m >= 2)
        last.exps[xv("X", n)] = static_cast<unsigned>(m - 1);
    last.exps[xv("X", n + 1)] = 1;
    out.push_back(std::move(last));
    return Equation(Polynomial::from_monomials(std::move(out)));
}

Equation make_ln(const FamilySpec& spec) {
    Params params(spec, {"a", "n", "c"});
    long a = params.natural("a", 2);
    long n = params.natural("n", 2);
    Rational c = params.rational("c");
    if (c.sign() <= 0)
        throw Error(ErrorKind::BadParameters, "LN parameter c must be positive");

    std::vector<Monomial> out;
    for (long i = 1; i <= n - 1; ++i) {
        Monomial t;
        t.coeff = Rational(int_pow(Int(a), static_cast<unsigned long>(2 * i)));
        t.exps[xv("X", i)] = 2;
        out.push_back(std::move(t));
    }
    Monomial sq;
    sq.coeff = Rational(-1);
    sq.exps[xv("X", n)] = 2;
    out.push_back(std::move(sq));
    Monomial prod;
    prod.coeff = -c;
    prod.exps[xv("X", n + 1)] = 1;
    prod.exps[xv("X", n + 2)] = 1;
    out.push_back(std::move(prod));
    return Equation(Polynomial::from_monomials(std::move(out)));
}

Equation make_golowich(const FamilySpec& spec) {
    Params params(spec, {"n"});
    long n = params.natural("n", 2);
    std::vector<Monomial> out;
    for (long i = 1; i <= n - 1; ++i) {
        Monomial t;
        t.coeff = Rational(int_pow(Int(2), static_cast<unsigned long>(i - 1)));
        t.exps[xv("x", i)] = 1;
        out.push_back(std::move(t));
    }
    Monomial last;
    last.coeff = -Rational(int_pow(Int(2), static_cast<unsigned long>(n - 1)));
    last.exps[xv("x", n)] = 1;
    out.push_back(std::move(last));
    return Equation(Polynomial::from_monomials(std::move(out)));
}

Equation make_at(const FamilySpec& spec) {
    Params params(spec, {"n"});
    long n = params.natural("n", 2);
    std::vector<Monomial> out;
    Rational first(1);
    for (long i = 1; i <= n - 1; ++i) {
        Int num = int_pow(Int(2), static_cast<unsigned long>(i));
        Rational ratio(num, num - 1);
        first -= ratio;
        Monomial t;
        t.coeff = ratio;
        t.exps[xv("x", i + 1)] = 1;
        out.push_back(std::move(t));
    }
    Monomial head;
    head.coeff = first;
    head.exps[xv("x", 1)] = 1;
    out.push_back(std::move(head));
    return Equation(Polynomial::from_monomials(std::move(out)));
}

Equation make_pyth() {
    Polynomial x = Polynomial::var(VarId("x"));
    Polynomial y = Polynomial::var(VarId("y"));
    Polynomial z = Polynomial::var(VarId("z"));
    return Equation(x.pow(2) + y.pow(2) - z.pow(2));
}

PatternSpec make_schur() {
    VarId x("x"), y("y");
    PatternSpec p;
    p.free_vars = {x, y};
    p.terms = {Polynomial::var(x), Polynomial::var(y), Polynomial::var(x) + Polynomial::var(y)};
    p.constraints = {Distinct{Polynomial::var(x), Polynomial::var(y)}};
    return p;
}

PatternSpec make_moreira() {
    VarId x("x"), y("y");
    PatternSpec p;
    p.free_vars = {x, y};
    p.terms = {Polynomial::var(x), Polynomial::var(x) + Polynomial::var(y),
               Polynomial::var(x) * Polynomial::var(y)};
    return p;
}

PatternSpec make_vdw_ap(const FamilySpec& spec) {
    Params params(spec, {"l"});
    long l = params.natural("l", 3);
    VarId a("a"), d("d");
    PatternSpec p;
    p.free_vars = {a, d};
    for (long i = 0; i < l; ++i)
        p.terms.push_back(Polynomial::var(a) + Rational(i) * Polynomial::var(d));
    return p;
}

PatternSpec make_bowen(const FamilySpec& spec) {
    Params params(spec, {"a", "b"});
    long na = params.natural("a", 1);
    long nb = params.natural("b", 1);
    PatternSpec p;
    std::vector<Polynomial> avars, bvars;
    for (long i = 1; i <= na; ++i) {
        p.free_vars.push_back(xv("a", i));
        avars.push_back(Polynomial::var(xv("a", i)));
    }
    for (long j = 1; j <= nb; ++j) {
        p.free_vars.push_back(xv("b", j));
        bvars.push_back(Polynomial::var(xv("b", j)));
    }
    for (const auto& a : avars)
        p.terms.push_back(a);
    for (const auto& a : avars)
        for (const auto& b : bvars)
            p.terms.push_back(a + b);
    for (const auto& a : avars)
        for (const auto& b : bvars)
            p.terms.push_back(a * b);
    // A and B are sets of the stated sizes
    for (std::size_t i = 0; i < avars.size(); ++i)
        for (std::size_t k = i + 1; k < avars.size(); ++k)
            p.constraints.push_back(Distinct{avars[i], avars[k]});
    for (std::size_t i = 0; i < bvars.size(); ++i)
        for (std::size_t k = i + 1; k < bvars.size(); ++k)
            p.constraints.push_back(Distinct{bvars[i], bvars[k]});
    return p;
}

} // namespace

Equation instantiate_equation(const FamilySpec& spec) {
    switch (spec.family) {
    case Family::MN: return make_mn(spec);
    case Family::LN: return make_ln(spec);
    case Family::Golowich: return make_golowich(spec);
    case Family::AT: return make_at(spec);
    case Family::Pyth: {
        Params params(spec, {});
        return make_pyth();
    }
    default:
        throw Error(ErrorKind::BadParameters,
                    family_to_string(spec.family) + " is a pattern family, not an equation");
    }
}

PatternSpec instantiate_pattern(const FamilySpec& spec) {
    switch (spec.family) {
    case Family::Schur: {
        Params params(spec, {});
        return make_schur();
    }
    case Family::Moreira: {
        Params params(spec, {});
        return make_moreira();
    }
    case Family::VdwAp: return make_vdw_ap(spec);
    case Family::BowenFinite: return make_bowen(spec);
    default:
        throw Error(ErrorKind::BadParameters,
                    family_to_string(spec.family) + " is an equation family, not a pattern");
    }
}

Target instantiate(const FamilySpec& spec) {
    if (family_is_equation(spec.family))
        return Target(instantiate_equation(spec));
    return Target(instantiate_pattern(spec));
}

} // namespace ramsey
