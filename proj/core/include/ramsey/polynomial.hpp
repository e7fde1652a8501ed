#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ramsey/rational.hpp"

namespace ramsey {

// Variable name: letters, digits, underscore; must start with a letter.
class VarId {
public:
    explicit VarId(std::string name);

    const std::string& name() const { return name_; }

    friend bool operator==(const VarId& a, const VarId& b) { return a.name_ == b.name_; }
    friend bool operator!=(const VarId& a, const VarId& b) { return a.name_ != b.name_; }
    friend bool operator<(const VarId& a, const VarId& b) { return a.name_ < b.name_; }

private:
    std::string name_;
};

struct Monomial {
    Rational coeff;
    std::map<VarId, unsigned> exps; // exponent >= 1 entries only

    unsigned degree() const;
};

// Returns <0, 0, >0: graded-lexicographic order on exponent maps
// (higher total degree first, then variable names ascending with the
// higher exponent winning at the first difference).
int compare_exponents(const Monomial& a, const Monomial& b);

// Multivariate polynomial over Q, kept normalized: like monomials merged,
// zero coefficients dropped, monomials sorted descending graded-lex.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial constant(const Rational& c);
    static Polynomial var(const VarId& v);
    static Polynomial from_monomials(std::vector<Monomial> monomials);

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Monomial>& terms() const { return terms_; }

    std::set<VarId> variables() const;
    unsigned degree() const;
    unsigned degree_in(const VarId& v) const;

    Rational evaluate(const std::map<VarId, Rational>& assignment) const;

    Polynomial pow(unsigned e) const;

    // Remainder of division by `relation` under the graded-lex order.
    // A single divisor generates its own Groebner basis, so the remainder
    // is zero exactly when this polynomial lies in the ideal (relation).
    Polynomial reduced_by(const Polynomial& relation) const;

    std::string str() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    Polynomial operator-() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    void normalize();

    std::vector<Monomial> terms_;
};

// True iff lhs - rhs is the zero polynomial, optionally after reduction by a
// side relation (checked as membership in the principal ideal it generates).
bool identity_holds(const Polynomial& lhs, const Polynomial& rhs,
                    const std::optional<Polynomial>& relation = std::nullopt);

} // namespace ramsey
