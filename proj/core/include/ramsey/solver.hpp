#pragma once

#include <cstdint>
#include <vector>

namespace ramsey {

enum class SatStatus { Sat, Unsat, CapExceeded };

struct SatResult {
    SatStatus status = SatStatus::CapExceeded;
    std::vector<std::int8_t> model; // index 1..num_vars, valid when Sat
    std::uint64_t decisions = 0;
    std::uint64_t propagations = 0;
};

// DPLL with two-watched-literal unit propagation and chronological
// backtracking; branching is the lowest-index unassigned variable, true
// first, for reproducibility. The budget counts decisions. No clause
// learning (desk scale).
SatResult solve_cnf(int num_vars, const std::vector<std::vector<int>>& clauses,
                    std::uint64_t decision_budget = UINT64_MAX);

} // namespace ramsey
