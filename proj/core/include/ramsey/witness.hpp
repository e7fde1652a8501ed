#pragma once

#include "ramsey/coloring.hpp"
#include "ramsey/equation.hpp"

namespace ramsey {

// An explicit solution construction, checked by exact evaluation. VALID means
// residual exactly 0; integrality is tracked separately because the algebra
// lives in Q while the monochromatic claims live in Z+.
struct WitnessReport {
    Equation target;
    std::map<VarId, Rational> assignment;
    Rational residual;
    bool valid = false;    // residual == 0
    bool integral = false; // every assigned value is a positive integer
    // colors of the assigned values under a supplied coloring, when all
    // values are integral and inside its domain
    std::optional<int> mono_color; // set when all values share a color
    bool color_checked = false;

    std::string str() const;
};

enum class WitnessMode { RationalOnly, RequireIntegral };

// X = x + c u^n / 2, Y = y, Z = z, U = u, V = x + c u^n / 4 solves
// X^2 + Y^2 = Z^2 + c U^n V whenever x^2 + y^2 = z^2. Integral mode requires
// the shifts to land in Z+.
WitnessReport pyth_shift_witness(const Int& x, const Int& y, const Int& z, const Int& u,
                                 const Rational& c, unsigned n,
                                 WitnessMode mode = WitnessMode::RationalOnly,
                                 const Coloring* coloring = nullptr);

enum class PmSign { Plus, Minus };

// From (z + (c/2)d)^2 - (y +- (c/2)d)^2 = x^2 + c(zd -+ yd):
// X = x, Y = y +- (c/2)d, Z = z + (c/2)d, U = zd, V = yd solves
// X^2 + Y^2 - Z^2 + cU -+ cV = 0 (the identity's arrangement; negating c
// recovers the X^2+Y^2 = Z^2 + c(U +- V) form).
WitnessReport pyth_pm_witness(const Int& x, const Int& y, const Int& z, const Int& d,
                              const Rational& c, PmSign sign,
                              WitnessMode mode = WitnessMode::RationalOnly,
                              const Coloring* coloring = nullptr);

// Monochromatic solution shape for MN(p, m, n) from the pigeonhole pair
// (b, b/p^{mj}): X_{i,1} = X_{i,2} = d for i != j, X_{j,1} = (b+d)/p^{mj},
// X_{j,2} = d, X_n = d, X_{n+1} = b + Qd with Q = sum p^{mi} - p^{mj} + 1.
// Strict preconditions p^{mj} | b and p^{mj} | d; `permissive` accepts the
// minimal p^{mj} | (b+d).
WitnessReport mn_witness(const Int& p, unsigned m, unsigned n, unsigned j, const Int& b,
                         const Int& d, bool permissive = false,
                         const Coloring* coloring = nullptr);

// Upper index of the sum inside Q for ln_witness: with n-1 the residual is
// identically zero; with n it keeps an extra a^{2n} d^2, retained so the
// discrepancy between the two conventions stays observable.
enum class LnQIndex { UpperNMinus1, UpperN };

WitnessReport ln_witness(const Int& a, const Rational& c, unsigned n, unsigned j, const Int& b,
                         const Int& d, LnQIndex q_index = LnQIndex::UpperNMinus1,
                         WitnessMode mode = WitnessMode::RationalOnly,
                         const Coloring* coloring = nullptr);

struct MoreiraReport {
    Int x;
    Int y;
    std::vector<Int> values; // x, x*y, then x + f(y) per f
    bool monochromatic = false;
    int color = -1;
};

// Values of the pattern {x, xy, x+f(y) : f in F} under a coloring; throws
// OutOfDomain when a value leaves [1, N].
MoreiraReport moreira_check(const Int& x, const Int& y, const std::vector<Polynomial>& fs,
                            const Coloring& coloring);

} // namespace ramsey
