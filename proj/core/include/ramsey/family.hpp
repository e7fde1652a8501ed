#pragma once

#include "ramsey/pattern.hpp"

namespace ramsey {

// The built-in catalog: named equation families and monochromatic patterns.
enum class Family {
    MN,          // sum p^{mi} X_{i,1} X_{i,2}^{m-1} - X_n^{m-1} X_{n+1}
    LN,          // sum a^{2i} X_i^2 - X_n^2 - c X_{n+1} X_{n+2}
    Golowich,    // x_1 + 2 x_2 + ... + 2^{n-2} x_{n-1} - 2^{n-1} x_n
    AT,          // (1 - sum 2^i/(2^i-1)) x_1 + sum 2^i/(2^i-1) x_{i+1}
    Schur,       // pattern {x, y, x+y : x != y}
    Moreira,     // pattern {x, x+y, x*y}
    Pyth,        // x^2 + y^2 - z^2
    VdwAp,       // pattern {a, a+d, ..., a+(l-1)d}
    BowenFinite, // pattern A u (A+B) u A*B with |A|, |B| fixed
};

Family family_from_string(std::string_view name); // BadParameters on unknown
std::string family_to_string(Family f);
std::vector<Family> all_families();

struct FamilySpec {
    Family family;
    std::map<std::string, Rational> params;
};

bool family_is_equation(Family f);

// The equation with the published coefficients and canonical variable names
// (MN: X_1_1, X_1_2, ..., X_<n>, X_<n+1>; LN: X_1..X_<n+2>; others x_1..x_n
// or x, y, z). Throws BadParameters outside the family's parameter domain or
// for pattern families.
Equation instantiate_equation(const FamilySpec& spec);

// The built-in pattern; throws BadParameters for equation families.
PatternSpec instantiate_pattern(const FamilySpec& spec);

Target instantiate(const FamilySpec& spec);

// Short description of the parameters a family accepts (for CLI listings).
std::string family_parameter_help(Family f);

} // namespace ramsey
