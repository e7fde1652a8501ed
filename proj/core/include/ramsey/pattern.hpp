#pragma once

#include <variant>

#include "ramsey/equation.hpp"

namespace ramsey {

// Side constraints on a pattern instantiation.
struct Positivity {
    Polynomial term;
};
struct Distinct {
    Polynomial a;
    Polynomial b;
};
struct Divides {
    Int k; // k >= 1
    VarId var;
};
using PatternConstraint = std::variant<Positivity, Distinct, Divides>;

// A finite set of polynomial terms in free variables; semantics: an
// instantiation is valid when every term value is an integer in [1, N] and
// all constraints hold, and it is monochromatic when the term values share
// one color. Terms keep their declared order.
struct PatternSpec {
    std::vector<VarId> free_vars;
    std::vector<Polynomial> terms;
    std::vector<PatternConstraint> constraints;

    // every variable declared, Divides k >= 1
    void validate() const;

    std::string str() const;
};

using Target = std::variant<Equation, PatternSpec>;

std::string target_str(const Target& t);

} // namespace ramsey
