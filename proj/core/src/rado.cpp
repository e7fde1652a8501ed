#include "ramsey/rado.hpp"

#include <algorithm>

#include "ramsey/errors.hpp"

namespace ramsey {

bool single_pr(const std::vector<Rational>& coeffs) {
    if (coeffs.empty())
        throw Error(ErrorKind::BadParameters, "no coefficients");
    if (coeffs.size() > 24)
        throw Error(ErrorKind::CapExceeded, "more than 24 coefficients");
    for (const auto& c : coeffs)
        if (c.is_zero())
            throw Error(ErrorKind::ZeroCoefficient, "coefficients must be nonzero");
    unsigned long full = 1ul << coeffs.size();
    for (unsigned long mask = 1; mask < full; ++mask) {
        Rational sum;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (mask & (1ul << i))
                sum += coeffs[i];
        if (sum.is_zero())
            return true;
    }
    return false;
}

void LinearSystem::validate() const {
    if (rows.empty())
        throw Error(ErrorKind::BadParameters, "system needs at least one row");
    std::size_t cols = rows.front().size();
    if (cols == 0)
        throw Error(ErrorKind::BadParameters, "system needs at least one column");
    for (const auto& r : rows)
        if (r.size() != cols)
            throw Error(ErrorKind::BadParameters, "ragged coefficient matrix");
    for (std::size_t c = 0; c < cols; ++c) {
        bool nonzero = false;
        for (const auto& r : rows)
            if (!r[c].is_zero())
                nonzero = true;
        if (!nonzero)
            throw Error(ErrorKind::BadParameters, "column " + std::to_string(c + 1) + " is all zero");
    }
}

namespace {

using Vec = std::vector<Rational>;

Vec column(const LinearSystem& sys, int c) {
    Vec out;
    out.reserve(sys.rows.size());
    for (const auto& r : sys.rows)
        out.push_back(r[static_cast<std::size_t>(c)]);
    return out;
}

Vec subset_sum(const LinearSystem& sys, unsigned mask) {
    Vec out(sys.rows.size(), Rational(0));
    for (std::size_t c = 0; c < sys.columns(); ++c)
        if (mask & (1u << c))
            for (std::size_t r = 0; r < sys.rows.size(); ++r)
                out[r] += sys.rows[r][c];
    return out;
}

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

// Gaussian elimination rank over Q.
std::size_t rank(std::vector<Vec> vectors) {
    std::size_t rk = 0;
    if (vectors.empty())
        return 0;
    std::size_t dim = vectors.front().size();
    for (std::size_t col = 0; col < dim && rk < vectors.size(); ++col) {
        std::size_t pivot = rk;
        while (pivot < vectors.size() && vectors[pivot][col].is_zero())
            ++pivot;
        if (pivot == vectors.size())
            continue;
        std::swap(vectors[rk], vectors[pivot]);
        for (std::size_t i = rk + 1; i < vectors.size(); ++i) {
            if (vectors[i][col].is_zero())
                continue;
            Rational f = vectors[i][col] / vectors[rk][col];
            for (std::size_t j = col; j < dim; ++j)
                vectors[i][j] -= f * vectors[rk][j];
        }
        ++rk;
    }
    return rk;
}

bool in_span(const std::vector<Vec>& basis, const Vec& v) {
    if (is_zero_vec(v))
        return true;
    std::vector<Vec> with = basis;
    with.push_back(v);
    return rank(basis) == rank(with);
}

std::vector<int> mask_columns(unsigned mask, std::size_t cols) {
    std::vector<int> out;
    for (std::size_t c = 0; c < cols; ++c)
        if (mask & (1u << c))
            out.push_back(static_cast<int>(c));
    return out;
}

// DFS over the set of already-used columns; memoized dead states.
bool extend(const LinearSystem& sys, unsigned used, unsigned all,
            std::vector<unsigned>& blocks, std::vector<char>& dead) {
    if (used == all)
        return true;
    if (dead[used])
        return false;
    std::vector<Vec> basis;
    for (std::size_t c = 0; c < sys.columns(); ++c)
        if (used & (1u << c))
            basis.push_back(column(sys, static_cast<int>(c)));
    unsigned rest = all & ~used;
    // iterate nonempty submasks of rest in increasing numeric order
    for (unsigned sub = rest; sub; sub = (sub - 1) & rest) {
        // visiting in decreasing order; determinism restored by re-sorting below
        Vec s = subset_sum(sys, sub);
        if (!in_span(basis, s))
            continue;
        blocks.push_back(sub);
        if (extend(sys, used | sub, all, blocks, dead))
            return true;
        blocks.pop_back();
    }
    dead[used] = 1;
    return false;
}

} // namespace

ColumnsConditionResult columns_condition(const LinearSystem& system) {
    system.validate();
    std::size_t cols = system.columns();
    if (cols > 12)
        throw Error(ErrorKind::CapExceeded, "columns condition limited to 12 columns, got " +
                                                std::to_string(cols));
    unsigned all = (1u << cols) - 1;
    std::vector<char> dead(all + 1u, 0);

    ColumnsConditionResult result;
    // candidate first blocks in increasing numeric order for determinism
    for (unsigned first = 1; first <= all; ++first) {
        if (!is_zero_vec(subset_sum(system, first)))
            continue;
        std::vector<unsigned> blocks{first};
        if (extend(system, first, all, blocks, dead)) {
            result.holds = true;
            for (unsigned mask : blocks)
                result.blocks.push_back(mask_columns(mask, cols));
            return result;
        }
    }
    return result;
}

bool columns_condition_witness_valid(const LinearSystem& system,
                                     const std::vector<std::vector<int>>& blocks) {
    system.validate();
    if (blocks.empty())
        return false;
    std::vector<char> seen(system.columns(), 0);
    for (const auto& b : blocks) {
        if (b.empty())
            return false;
        for (int c : b) {
            if (c < 0 || static_cast<std::size_t>(c) >= system.columns() || seen[static_cast<std::size_t>(c)])
                return false;
            seen[static_cast<std::size_t>(c)] = 1;
        }
    }
    for (char s : seen)
        if (!s)
            return false;

    std::vector<Vec> basis;
    for (std::size_t t = 0; t < blocks.size(); ++t) {
        Vec sum(system.rows.size(), Rational(0));
        for (int c : blocks[t])
            for (std::size_t r = 0; r < system.rows.size(); ++r)
                sum[r] += system.rows[r][static_cast<std::size_t>(c)];
        if (t == 0) {
            if (!is_zero_vec(sum))
                return false;
        } else if (!in_span(basis, sum)) {
            return false;
        }
        for (int c : blocks[t])
            basis.push_back(column(system, c));
    }
    return true;
}

} // namespace ramsey
