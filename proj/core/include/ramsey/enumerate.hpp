#pragma once

#include <cstdint>

#include "ramsey/pattern.hpp"

namespace ramsey {

// One instantiation of a target inside [1, N]: the representative assignment
// (lexicographically least by variable name producing this value set) and the
// sorted distinct values it touches.
struct Instance {
    std::map<VarId, Int> assignment;
    std::vector<long> values;
};

struct EnumerationPolicy {
    bool require_distinct = false;
};

// Every valid instantiation with all values in [1, N], deduplicated by value
// set, in deterministic (assignment-lexicographic) order. For equations the
// values are the variable values of a solution; for patterns the term values.
std::vector<Instance> enumerate_instances(const Target& target, long n,
                                          const EnumerationPolicy& policy = {});

} // namespace ramsey
