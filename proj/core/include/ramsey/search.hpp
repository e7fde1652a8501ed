#pragma once

#include "ramsey/cnf.hpp"
#include "ramsey/verify.hpp"

namespace ramsey {

struct SearchOptions {
    std::uint64_t budget = UINT64_MAX; // node count, for determinism
    int workers = 1;
    bool require_distinct = false;
};

struct SearchResult {
    enum class Kind { BadColoring, AllForced, CapExceeded } kind = Kind::CapExceeded;
    std::optional<Coloring> coloring; // when BadColoring
    long n = 0;
    std::uint64_t nodes = 0;
};

// Backtracking over the colors of 1..N in ascending order (colors ascending,
// color(1) fixed to 0). BadColoring returns the lexicographically least
// avoiding coloring; AllForced means every r-coloring of [1, N] contains a
// monochromatic instance. Deterministic for fixed (target, r, N, budget)
// regardless of worker count.
SearchResult find_bad_coloring(const Target& target, int colors, long n,
                               const SearchOptions& options = {});

struct LeastForcingResult {
    enum class Kind { Found, NotForcedWithinCap, CapExceeded } kind = Kind::NotForcedWithinCap;
    long n = 0;              // least forced N when Found
    std::uint64_t nodes = 0; // total across the scan
};

// Minimal N <= cap with find_bad_coloring(target, r, N) = AllForced.
LeastForcingResult least_forcing_N(const Target& target, int colors, long cap,
                                   const SearchOptions& options = {});

} // namespace ramsey
