#pragma once

#include <vector>

#include "ramsey/rational.hpp"

namespace ramsey {

// Rado's single-equation criterion: some nonempty subset of the coefficients
// sums to zero. All coefficients must be nonzero.
bool single_pr(const std::vector<Rational>& coeffs);

// Coefficient matrix of a linear homogeneous system; rows are equations.
// Invariants: at least one row, no all-zero column.
struct LinearSystem {
    std::vector<std::vector<Rational>> rows;

    std::size_t columns() const { return rows.empty() ? 0 : rows.front().size(); }
    void validate() const;
};

struct ColumnsConditionResult {
    bool holds = false;
    // witnessing ordered partition of column indices, when holds
    std::vector<std::vector<int>> blocks;
};

// The columns condition: an ordered partition B_1,...,B_k of the columns with
// sum(B_1) = 0 and each sum(B_t) in the rational span of the columns in
// earlier blocks. Exhaustive over <= 12 columns; larger systems are refused
// with CapExceeded.
ColumnsConditionResult columns_condition(const LinearSystem& system);

// Exact re-verification of a claimed witness partition.
bool columns_condition_witness_valid(const LinearSystem& system,
                                     const std::vector<std::vector<int>>& blocks);

} // namespace ramsey
