#pragma once

#include <cstdint>

#include "ramsey/coloring.hpp"
#include "ramsey/pattern.hpp"

namespace ramsey {

// A monochromatic instantiation found inside [1, N]: the assignment, the term
// values in declared order (variable values for equations), and the shared
// color.
struct Counterexample {
    std::map<VarId, Int> assignment;
    std::vector<Int> term_values;
    int color = 0;
};

struct VerifyPolicy {
    bool require_distinct = false;
    std::uint64_t budget = UINT64_MAX;
    int workers = 1;
};

struct VerifyOutcome {
    enum class Kind { Ok, Counterexample, BudgetExceeded } kind = Kind::Ok;
    std::optional<ramsey::Counterexample> counterexample;
    std::uint64_t nodes = 0;
};

// Ok iff no monochromatic instantiation of the target exists with all values
// in [1, N]; otherwise the lexicographically least counterexample (by
// variable name, then value). BudgetExceeded is a distinct outcome, never
// conflated with Ok. Requires N <= coloring domain.
VerifyOutcome verify_avoids(const Target& target, const Coloring& coloring, long n,
                            const VerifyPolicy& policy = {});

// Re-check a counterexample from scratch (exact arithmetic); used by tests
// and by the CLI when re-validating archived reports.
bool counterexample_valid(const Target& target, const Coloring& coloring, long n,
                          const Counterexample& cex, bool require_distinct = false);

} // namespace ramsey
