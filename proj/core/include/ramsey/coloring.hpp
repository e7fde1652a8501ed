#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "ramsey/valuation.hpp"

namespace ramsey {

// Total color assignment on [1, N] with colors 0..r-1: either an explicit
// table or the rule color(x) = ord_p(x) mod modulus.
class Coloring {
public:
    static Coloring padic(const Int& p, int modulus, long n); // NonPrimeModulus
    static Coloring table(std::vector<int> colors, int r);    // colors[i] is the color of i+1

    long domain_size() const { return n_; }
    int colors() const { return r_; }

    int color(long x) const;
    int color(const Int& x) const;

    bool is_padic_rule() const { return padic_.has_value(); }
    const Int& p() const { return padic_->p; }
    int modulus() const { return padic_->modulus; }

    // Every x in [1, N] of this color, ascending.
    std::vector<long> color_class(int c) const;

    // table comparison: same domain, same colors everywhere
    friend bool operator==(const Coloring& a, const Coloring& b);

private:
    Coloring() = default;

    struct PadicRule {
        Int p;
        int modulus;
    };

    long n_ = 0;
    int r_ = 1;
    std::optional<PadicRule> padic_;
    std::vector<int> table_;
};

// File format: line 1 "N r", then N lines "i c" with i ascending from 1;
// '#' starts a comment. Throws FormatError with the offending line number.
void save_coloring(const Coloring& coloring, std::ostream& out);
Coloring load_coloring(std::istream& in);

struct PigeonholePair {
    Int b;
    int j;
};

// Scans the chain M, M/a, ..., M/a^k for the first color repeat
// (smallest i', then smallest j'); returns b = M/a^{i'} and j = j'-i',
// so color(b) = color(b / a^j). Requires a^k | M, chain inside the domain,
// and k >= number of colors.
PigeonholePair pigeonhole_pair(const Coloring& coloring, const Int& a, int k, const Int& M);

} // namespace ramsey
