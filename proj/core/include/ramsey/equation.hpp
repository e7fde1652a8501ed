#pragma once

#include "ramsey/polynomial.hpp"

namespace ramsey {

// A polynomial equation "lhs = 0", normalized eagerly.
class Equation {
public:
    explicit Equation(Polynomial lhs) : lhs_(std::move(lhs)) {}

    const Polynomial& lhs() const { return lhs_; }
    const std::vector<Monomial>& terms() const { return lhs_.terms(); }

    // Exact value of the left-hand side; every assigned value must be >= 1.
    Rational evaluate(const std::map<VarId, Int>& assignment) const;

    std::set<VarId> variables() const { return lhs_.variables(); }
    std::string str() const { return lhs_.str(); }

    friend bool operator==(const Equation& a, const Equation& b) { return a.lhs_ == b.lhs_; }
    friend bool operator!=(const Equation& a, const Equation& b) { return !(a == b); }

private:
    Polynomial lhs_;
};

// Grammar: signed rational coefficients, variables, '^' natural exponents,
// '*' products, '+'/'-' sums, optional single '='; "lhs = rhs" is stored as
// lhs - rhs. Throws SyntaxError with position; EmptyEquation when everything
// cancels to 0 = 0.
Equation parse_equation(std::string_view text);

// Expression parser for pattern terms and identity checks (no '=' allowed,
// zero polynomial permitted).
Polynomial parse_polynomial(std::string_view text);

} // namespace ramsey
