#pragma once

#include "ramsey/equation.hpp"
#include "ramsey/valuation.hpp"

namespace ramsey {

// Non-regularity certificate for the coloring x -> ord_p(x) mod modulus.
// Obstructed: for every color r the per-term residues are pairwise distinct,
// hence any monochromatic assignment gives the terms pairwise distinct
// valuations, the sum has finite valuation, and the sum cannot be zero.
struct ObstructionReport {
    Equation equation;
    Int p;
    int modulus = 2;
    bool obstructed = false;
    // first collision when not obstructed
    int collision_color = -1;
    int collision_term_a = -1;
    int collision_term_b = -1;
    std::vector<std::vector<int>> residue_table; // [color][term]
};

// residue(term) = ord_p(coeff) + color * degree  (mod modulus), one entry per
// monomial in equation term order. Variables are assumed monochromatic of
// color `color`, i.e. every variable valuation is congruent to it.
std::vector<int> term_residues(const Equation& eq, const Int& p, int modulus, int color);

// Throws ConstantTerm when a monomial has no variables (its valuation is
// fixed rather than color-shifted; flagged for manual review).
ObstructionReport obstruction_certificate(const Equation& eq, const Int& p, int modulus);

} // namespace ramsey
