#include "ramsey/solver.hpp"

#include <algorithm>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

// literal code: 2*(var-1) + (negated ? 1 : 0)
int lit_code(int lit) { return 2 * (std::abs(lit) - 1) + (lit < 0 ? 1 : 0); }
int lit_neg(int code) { return code ^ 1; }
int lit_var(int code) { return code >> 1; }
bool lit_sign(int code) { return (code & 1) == 0; } // true literal?

class Dpll {
public:
    Dpll(int num_vars, const std::vector<std::vector<int>>& clauses, std::uint64_t budget)
        : nvars_(num_vars), budget_(budget) {
        value_.assign(static_cast<std::size_t>(nvars_), -1);
        watches_.assign(static_cast<std::size_t>(2 * nvars_), {});
        for (const auto& clause : clauses) {
            if (clause.empty()) {
                empty_clause_ = true;
                continue;
            }
            std::vector<int> codes;
            codes.reserve(clause.size());
            for (int lit : clause) {
                if (lit == 0 || std::abs(lit) > nvars_)
                    throw Error(ErrorKind::BadParameters, "bad literal in clause");
                codes.push_back(lit_code(lit));
            }
            if (codes.size() == 1) {
                initial_units_.push_back(codes[0]);
                continue;
            }
            int idx = static_cast<int>(clauses_.size());
            clauses_.push_back(std::move(codes));
            watches_[static_cast<std::size_t>(clauses_.back()[0])].push_back(idx);
            watches_[static_cast<std::size_t>(clauses_.back()[1])].push_back(idx);
        }
    }

    SatResult run() {
        SatResult result;
        if (empty_clause_) {
            result.status = SatStatus::Unsat;
            return result;
        }
        for (int unit : initial_units_) {
            if (!enqueue(unit)) {
                result.status = SatStatus::Unsat;
                return result;
            }
        }
        if (!propagate()) {
            result.status = SatStatus::Unsat;
            result.propagations = propagations_;
            return result;
        }

        while (true) {
            int var = next_unassigned();
            if (var < 0) {
                result.status = SatStatus::Sat;
                result.model.assign(static_cast<std::size_t>(nvars_) + 1, 0);
                for (int v = 0; v < nvars_; ++v)
                    result.model[static_cast<std::size_t>(v) + 1] = value_[static_cast<std::size_t>(v)] == 1 ? 1 : 0;
                break;
            }
            if (++decisions_ > budget_) {
                result.status = SatStatus::CapExceeded;
                break;
            }
            levels_.push_back({static_cast<int>(trail_.size()), 2 * var + 1, false});
            enqueue(2 * var + 1); // try false first; free variables stay false
            while (!propagate()) {
                // chronological backtracking with phase flip
                while (!levels_.empty() && levels_.back().flipped)
                    pop_level();
                if (levels_.empty()) {
                    result.status = SatStatus::Unsat;
                    result.decisions = decisions_;
                    result.propagations = propagations_;
                    return result;
                }
                Level& top = levels_.back();
                int flipped_lit = lit_neg(top.decision);
                unwind(top.trail_mark);
                branch_hint_ = lit_var(top.decision);
                top.flipped = true;
                enqueue(flipped_lit);
            }
        }
        result.decisions = decisions_;
        result.propagations = propagations_;
        return result;
    }

private:
    struct Level {
        int trail_mark;
        int decision;
        bool flipped;
    };

    int next_unassigned() {
        while (branch_hint_ < nvars_ && value_[static_cast<std::size_t>(branch_hint_)] != -1)
            ++branch_hint_;
        return branch_hint_ < nvars_ ? branch_hint_ : -1;
    }

    bool enqueue(int code) {
        int var = lit_var(code);
        std::int8_t want = lit_sign(code) ? 1 : 0;
        std::int8_t& slot = value_[static_cast<std::size_t>(var)];
        if (slot != -1)
            return slot == want;
        slot = want;
        trail_.push_back(code);
        return true;
    }

    bool falsified(int code) const {
        std::int8_t v = value_[static_cast<std::size_t>(lit_var(code))];
        if (v == -1)
            return false;
        return (v == 1) != lit_sign(code);
    }
    bool satisfied(int code) const {
        std::int8_t v = value_[static_cast<std::size_t>(lit_var(code))];
        if (v == -1)
            return false;
        return (v == 1) == lit_sign(code);
    }

    bool propagate() {
        while (qhead_ < trail_.size()) {
            int assigned = trail_[qhead_++];
            ++propagations_;
            int false_lit = lit_neg(assigned);
            auto& watch_list = watches_[static_cast<std::size_t>(false_lit)];
            std::size_t keep = 0;
            for (std::size_t wi = 0; wi < watch_list.size(); ++wi) {
                int ci = watch_list[wi];
                auto& lits = clauses_[static_cast<std::size_t>(ci)];
                // normalize: watched pair sits at positions 0 and 1
                if (lits[0] == false_lit)
                    std::swap(lits[0], lits[1]);
                if (satisfied(lits[0])) {
                    watch_list[keep++] = ci;
                    continue;
                }
                bool moved = false;
                for (std::size_t k = 2; k < lits.size(); ++k) {
                    if (!falsified(lits[k])) {
                        std::swap(lits[1], lits[k]);
                        watches_[static_cast<std::size_t>(lits[1])].push_back(ci);
                        moved = true;
                        break;
                    }
                }
                if (moved)
                    continue;
                // unit or conflict on lits[0]
                watch_list[keep++] = ci;
                if (!enqueue(lits[0])) {
                    // conflict: keep remaining watches intact
                    for (std::size_t rest = wi + 1; rest < watch_list.size(); ++rest)
                        watch_list[keep++] = watch_list[rest];
                    watch_list.resize(keep);
                    return false;
                }
            }
            watch_list.resize(keep);
        }
        return true;
    }

    void unwind(int mark) {
        while (static_cast<int>(trail_.size()) > mark) {
            int code = trail_.back();
            trail_.pop_back();
            value_[static_cast<std::size_t>(lit_var(code))] = -1;
        }
        qhead_ = trail_.size();
    }

    void pop_level() {
        unwind(levels_.back().trail_mark);
        branch_hint_ = lit_var(levels_.back().decision);
        levels_.pop_back();
    }

    int nvars_;
    std::uint64_t budget_;
    bool empty_clause_ = false;
    std::vector<std::vector<int>> clauses_;
    std::vector<int> initial_units_;
    std::vector<std::vector<int>> watches_;
    std::vector<std::int8_t> value_;
    std::vector<int> trail_;
    std::size_t qhead_ = 0;
    std::vector<Level> levels_;
    int branch_hint_ = 0;
    std::uint64_t decisions_ = 0;
    std::uint64_t propagations_ = 0;
};

} // namespace

SatResult solve_cnf(int num_vars, const std::vector<std::vector<int>>& clauses,
                    std::uint64_t decision_budget) {
    if (num_vars < 0)
        throw Error(ErrorKind::BadParameters, "negative variable count");
    Dpll solver(num_vars, clauses, decision_budget);
    return solver.run();
}

} // namespace ramsey
