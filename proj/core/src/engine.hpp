#pragma once

// Shared assignment-enumeration core for equation and pattern targets.
// Equations: DFS over variables in ascending name order with interval
// pruning, an exact solve for the last variable when it occurs linearly or
// as a pure power, and (under a p-adic rule coloring) a concrete ultrametric
// prune on the valuation of the partial sum. Patterns: nested enumeration of
// free variables with per-term readiness checks.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/equation.hpp"
#include "ramsey/pattern.hpp"

namespace ramsey::detail {

enum class DfsStatus { Complete, Stopped, BudgetExceeded };

// Common candidate domain for every variable: either the full box [1, N] or
// an explicit ascending value set (one color class).
struct VarDomain {
    long lo = 1;
    long hi = 0;
    const std::vector<long>* values = nullptr; // null: contiguous [lo, hi]

    long size() const { return values ? static_cast<long>(values->size()) : hi - lo + 1; }
    long value_at(long i) const { return values ? (*values)[static_cast<std::size_t>(i)] : lo + i; }
    bool contains(long v) const;
    bool empty() const { return size() <= 0; }
    long min_value() const { return values ? values->front() : lo; }
    long max_value() const { return values ? values->back() : hi; }
};

struct UltrametricPrune {
    Int p;
    int modulus = 0;
    int color_class = 0;
};

struct EquationProblem {
    std::vector<VarId> vars; // ascending by name
    struct Term {
        Int coeff;
        std::vector<std::pair<int, unsigned>> factors; // (var index, exponent)
        unsigned degree = 0;
    };
    std::vector<Term> terms; // coefficients scaled to integers

    static EquationProblem build(const Equation& eq);
};

struct EquationDfsConfig {
    VarDomain domain;
    bool require_distinct = false;
    std::uint64_t budget = UINT64_MAX;
    std::optional<UltrametricPrune> prune;
};

// Callback receives values per variable (problem.vars order); return false
// to stop the enumeration.
DfsStatus run_equation_dfs(const EquationProblem& problem, const EquationDfsConfig& config,
                           const std::function<bool(const std::vector<long>&)>& on_solution,
                           std::uint64_t* nodes_out = nullptr);

struct PatternProblem {
    std::vector<VarId> vars; // ascending by name
    std::vector<Polynomial> terms;
    std::vector<PatternConstraint> constraints;

    static PatternProblem build(const PatternSpec& spec);
};

struct PatternDfsConfig {
    long n = 0; // all free variables and term values range in [1, n]
    long first_var_lo = 1;
    long first_var_hi = 0; // 0: up to n (split point for parallel verify)
    bool require_distinct = false;
    std::uint64_t budget = UINT64_MAX;
    const Coloring* coloring = nullptr; // when set, only monochromatic instantiations reach the callback
};

// Callback receives (values per variable, term values in declared order).
DfsStatus run_pattern_dfs(const PatternProblem& problem, const PatternDfsConfig& config,
                          const std::function<bool(const std::vector<long>&, const std::vector<Int>&)>& on_instance,
                          std::uint64_t* nodes_out = nullptr);

} // namespace ramsey::detail
