#include "ramsey/witness.hpp"

#include "ramsey/valuation.hpp"

namespace ramsey {

namespace {

void check_triple(const Int& x, const Int& y, const Int& z) {
    if (x < 1 || y < 1 || z < 1 || x * x + y * y != z * z)
        throw Error(ErrorKind::NotAPythagoreanTriple,
                    "(" + int_str(x) + ", " + int_str(y) + ", " + int_str(z) + ")");
}

WitnessReport finish(Equation target, std::map<VarId, Rational> assignment, WitnessMode mode,
                     const Coloring* coloring) {
    WitnessReport report{std::move(target), std::move(assignment), Rational(0)};
    std::map<VarId, Rational> values(report.assignment.begin(), report.assignment.end());
    report.residual = report.target.lhs().evaluate(values);
    report.valid = report.residual.is_zero();
    report.integral = true;
    for (const auto& [v, val] : report.assignment)
        if (!val.is_positive_integer())
            report.integral = false;
    if (mode == WitnessMode::RequireIntegral && !report.integral) {
        std::string bad;
        for (const auto& [v, val] : report.assignment)
            if (!val.is_positive_integer())
                bad += (bad.empty() ? "" : ", ") + v.name() + " = " + val.str();
        throw Error(ErrorKind::NonIntegralWitness, bad);
    }
    if (coloring && report.integral) {
        report.color_checked = true;
        int color = -1;
        bool mono = true;
        for (const auto& [v, val] : report.assignment) {
            Int value = val.as_integer();
            if (value > coloring->domain_size()) {
                report.color_checked = false;
                mono = false;
                break;
            }
            int c = coloring->color(value);
            if (color == -1)
                color = c;
            else if (c != color)
                mono = false;
        }
        if (report.color_checked && mono)
            report.mono_color = color;
    }
    return report;
}

} // namespace

std::string WitnessReport::str() const {
    std::string out = valid ? "VALID" : "INVALID";
    out += " residual=" + residual.str();
    out += integral ? " integral" : " non-integral";
    if (color_checked)
        out += mono_color ? (" monochromatic(color " + std::to_string(*mono_color) + ")")
                          : " not-monochromatic";
    return out;
}

WitnessReport pyth_shift_witness(const Int& x, const Int& y, const Int& z, const Int& u,
                                 const Rational& c, unsigned n, WitnessMode mode,
                                 const Coloring* coloring) {
    check_triple(x, y, z);
    if (u < 1)
        throw Error(ErrorKind::BadParameters, "u must be >= 1");

    VarId X("X"), Y("Y"), Z("Z"), U("U"), V("V");
    // X^2 + Y^2 - Z^2 - c U^n V
    Polynomial lhs = Polynomial::var(X).pow(2) + Polynomial::var(Y).pow(2) -
                     Polynomial::var(Z).pow(2) -
                     c * (Polynomial::var(U).pow(n) * Polynomial::var(V));
    Rational shift_half = c * Rational(int_pow(u, n)) / Rational(2);
    Rational shift_quarter = c * Rational(int_pow(u, n)) / Rational(4);

    std::map<VarId, Rational> assignment{
        {X, Rational(x) + shift_half}, {Y, Rational(y)}, {Z, Rational(z)},
        {U, Rational(u)},              {V, Rational(x) + shift_quarter},
    };
    return finish(Equation(std::move(lhs)), std::move(assignment), mode, coloring);
}

WitnessReport pyth_pm_witness(const Int& x, const Int& y, const Int& z, const Int& d,
                              const Rational& c, PmSign sign, WitnessMode mode,
                              const Coloring* coloring) {
    check_triple(x, y, z);
    if (d < 1)
        throw Error(ErrorKind::BadParameters, "d must be >= 1");

    VarId X("X"), Y("Y"), Z("Z"), U("U"), V("V");
    // X^2 + Y^2 - Z^2 + cU -+ cV = 0  (identity arrangement; see header)
    Polynomial lhs = Polynomial::var(X).pow(2) + Polynomial::var(Y).pow(2) -
                     Polynomial::var(Z).pow(2) + c * Polynomial::var(U);
    if (sign == PmSign::Plus)
        lhs = lhs - c * Polynomial::var(V);
    else
        lhs = lhs + c * Polynomial::var(V);

    Rational half = c * Rational(d) / Rational(2);
    Rational yy = (sign == PmSign::Plus) ? Rational(y) + half : Rational(y) - half;
    if (yy.sign() <= 0)
        throw Error(ErrorKind::NonPositiveValue, "Y = " + yy.str());
    std::map<VarId, Rational> assignment{
        {X, Rational(x)}, {Y, yy}, {Z, Rational(z) + half},
        {U, Rational(Int(z * d))}, {V, Rational(Int(y * d))},
    };
    return finish(Equation(std::move(lhs)), std::move(assignment), mode, coloring);
}

WitnessReport mn_witness(const Int& p, unsigned m, unsigned n, unsigned j, const Int& b,
                         const Int& d, bool permissive, const Coloring* coloring) {
    if (!is_prime(p))
        throw Error(ErrorKind::NonPrimeModulus, int_str(p) + " is not prime");
    if (m < 1 || n < 2)
        throw Error(ErrorKind::BadParameters, "need m >= 1 and n >= 2");
    if (j < 1 || j > n - 1)
        throw Error(ErrorKind::BadIndex, "j must lie in [1, n-1]");
    if (b < 1 || d < 1)
        throw Error(ErrorKind::BadParameters, "b and d must be >= 1");

    Int pmj = int_pow(p, static_cast<unsigned long>(m) * j);
    if (permissive) {
        if (!mpz_divisible_p(Int(b + d).get_mpz_t(), pmj.get_mpz_t()))
            throw Error(ErrorKind::DivisibilityViolated,
                        "p^(mj) = " + int_str(pmj) + " must divide b + d");
    } else {
        if (!mpz_divisible_p(b.get_mpz_t(), pmj.get_mpz_t()) ||
            !mpz_divisible_p(d.get_mpz_t(), pmj.get_mpz_t()))
            throw Error(ErrorKind::DivisibilityViolated,
                        "p^(mj) = " + int_str(pmj) + " must divide both b and d");
    }

    // build MN(p, m, n) directly, matching the family's canonical names
    std::vector<Monomial> monomials;
    for (unsigned i = 1; i <= n - 1; ++i) {
        Monomial t;
        t.coeff = Rational(int_pow(p, static_cast<unsigned long>(m) * i));
        t.exps[VarId("X_" + std::to_string(i) + "_1")] = 1;
        if (m >= 2)
            t.exps[VarId("X_" + std::to_string(i) + "_2")] = m - 1;
        monomials.push_back(std::move(t));
    }
    Monomial last;
    last.coeff = Rational(-1);
    if (m >= 2)
        last.exps[VarId("X_" + std::to_string(n))] = m - 1;
    last.exps[VarId("X_" + std::to_string(n + 1))] = 1;
    monomials.push_back(std::move(last));
    Equation target(Polynomial::from_monomials(std::move(monomials)));

    Int q(1);
    for (unsigned i = 1; i <= n - 1; ++i)
        q += int_pow(p, static_cast<unsigned long>(m) * i);
    q -= pmj;

    std::map<VarId, Rational> assignment;
    for (unsigned i = 1; i <= n - 1; ++i) {
        assignment.emplace(VarId("X_" + std::to_string(i) + "_1"),
                           i == j ? Rational(Int(b + d), pmj) : Rational(d));
        assignment.emplace(VarId("X_" + std::to_string(i) + "_2"), Rational(d));
    }
    assignment.emplace(VarId("X_" + std::to_string(n)), Rational(d));
    assignment.emplace(VarId("X_" + std::to_string(n + 1)), Rational(Int(b + q * d)));
    return finish(std::move(target), std::move(assignment), WitnessMode::RequireIntegral, coloring);
}

WitnessReport ln_witness(const Int& a, const Rational& c, unsigned n, unsigned j, const Int& b,
                         const Int& d, LnQIndex q_index, WitnessMode mode,
                         const Coloring* coloring) {
    if (a < 2 || n < 2)
        throw Error(ErrorKind::BadParameters, "need a >= 2 and n >= 2");
    if (c.sign() <= 0)
        throw Error(ErrorKind::BadParameters, "c must be positive");
    if (j < 1 || j > n - 1)
        throw Error(ErrorKind::BadIndex, "j must lie in [1, n-1]");
    if (b < 1 || d < 1)
        throw Error(ErrorKind::BadParameters, "b and d must be >= 1");

    Int aj = int_pow(a, j);
    if (!mpz_divisible_p(b.get_mpz_t(), aj.get_mpz_t()))
        throw Error(ErrorKind::DivisibilityViolated, "a^j = " + int_str(aj) + " must divide b");

    // sum a^{2i} X_i^2 - X_n^2 - c X_{n+1} X_{n+2}
    std::vector<Monomial> monomials;
    for (unsigned i = 1; i <= n - 1; ++i) {
        Monomial t;
        t.coeff = Rational(int_pow(a, 2ul * i));
        t.exps[VarId("X_" + std::to_string(i))] = 2;
        monomials.push_back(std::move(t));
    }
    Monomial sq;
    sq.coeff = Rational(-1);
    sq.exps[VarId("X_" + std::to_string(n))] = 2;
    monomials.push_back(std::move(sq));
    Monomial prod;
    prod.coeff = -c;
    prod.exps[VarId("X_" + std::to_string(n + 1))] = 1;
    prod.exps[VarId("X_" + std::to_string(n + 2))] = 1;
    monomials.push_back(std::move(prod));
    Equation target(Polynomial::from_monomials(std::move(monomials)));

    // Q = (4/c)(sum_{i=1}^{upper} a^{2i} - a^{2j} + c^2/4)
    unsigned upper = (q_index == LnQIndex::UpperNMinus1) ? n - 1 : n;
    Rational sum(0);
    for (unsigned i = 1; i <= upper; ++i)
        sum += Rational(int_pow(a, 2ul * i));
    Rational q = (Rational(4) / c) * (sum - Rational(int_pow(a, 2ul * j)) + c * c / Rational(4));

    std::map<VarId, Rational> assignment;
    for (unsigned i = 1; i <= n - 1; ++i)
        assignment.emplace(VarId("X_" + std::to_string(i)),
                           i == j ? (Rational(b) + c * Rational(d) / Rational(2)) / Rational(aj)
                                  : Rational(d));
    assignment.emplace(VarId("X_" + std::to_string(n)), Rational(b));
    assignment.emplace(VarId("X_" + std::to_string(n + 1)), Rational(d));
    assignment.emplace(VarId("X_" + std::to_string(n + 2)),
                       Rational(b) + q / Rational(4) * Rational(d));
    return finish(std::move(target), std::move(assignment), mode, coloring);
}

MoreiraReport moreira_check(const Int& x, const Int& y, const std::vector<Polynomial>& fs,
                            const Coloring& coloring) {
    if (x < 1 || y < 1)
        throw Error(ErrorKind::BadParameters, "x and y must be >= 1");
    MoreiraReport report{x, y, {}};
    report.values.push_back(x);
    report.values.push_back(Int(x * y));
    std::map<VarId, Rational> env{{VarId("y"), Rational(y)}};
    for (const auto& f : fs) {
        for (const auto& v : f.variables())
            if (v != VarId("y"))
                throw Error(ErrorKind::BadParameters,
                            "polynomials must be univariate in y, found '" + v.name() + "'");
        Rational value = Rational(x) + f.evaluate(env);
        if (!value.is_positive_integer())
            throw Error(ErrorKind::OutOfDomain, "x + f(y) = " + value.str() + " is not in Z+");
        report.values.push_back(value.as_integer());
    }
    int color = -1;
    bool mono = true;
    for (const auto& v : report.values) {
        if (v < 1 || v > coloring.domain_size())
            throw Error(ErrorKind::OutOfDomain, int_str(v) + " outside the coloring domain");
        int c = coloring.color(v);
        if (color == -1)
            color = c;
        else if (c != color)
            mono = false;
    }
    report.monochromatic = mono;
    report.color = mono ? color : -1;
    return report;
}

} // namespace ramsey
