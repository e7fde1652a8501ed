#include "engine.hpp"

#include <algorithm>
#include <cmath>

namespace ramsey::detail {

bool VarDomain::contains(long v) const {
    if (!values)
        return v >= lo && v <= hi;
    return std::binary_search(values->begin(), values->end(), v);
}

EquationProblem EquationProblem::build(const Equation& eq) {
    EquationProblem out;
    auto var_set = eq.variables();
    out.vars.assign(var_set.begin(), var_set.end());
    std::sort(out.vars.begin(), out.vars.end());

    // scale coefficients to integers; the solution set is unchanged
    Int denom_lcm(1);
    for (const auto& m : eq.terms())
        mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), m.coeff.denominator().get_mpz_t());

    for (const auto& m : eq.terms()) {
        Term t;
        t.coeff = m.coeff.numerator() * (denom_lcm / m.coeff.denominator());
        for (const auto& [v, e] : m.exps) {
            auto it = std::lower_bound(out.vars.begin(), out.vars.end(), v);
            t.factors.emplace_back(static_cast<int>(it - out.vars.begin()), e);
            t.degree += e;
        }
        out.terms.push_back(std::move(t));
    }
    return out;
}

namespace {

long ord_of(long long v, long long p) {
    long ord = 0;
    if (p == 2) {
        return static_cast<long>(__builtin_ctzll(static_cast<unsigned long long>(v < 0 ? -v : v)));
    }
    long long a = v < 0 ? -v : v;
    while (a % p == 0) {
        a /= p;
        ++ord;
    }
    return ord;
}

long ord_of(const Int& v, const Int& p) {
    Int scratch;
    return static_cast<long>(mpz_remove(scratch.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t()));
}

long long num_pow(long long base, unsigned e) {
    long long out = 1;
    while (e--)
        out *= base;
    return out;
}

Int num_pow(const Int& base, unsigned e) { return int_pow(base, e); }

// exact positive d-th root of q, or nullopt
std::optional<long> exact_root(long long q, unsigned d) {
    if (q <= 0)
        return std::nullopt;
    if (d == 1)
        return static_cast<long>(q);
    long long guess = static_cast<long long>(std::llround(std::pow(static_cast<double>(q), 1.0 / d)));
    for (long long z = std::max(1LL, guess - 2); z <= guess + 2; ++z) {
        if (num_pow(z, d) == q)
            return static_cast<long>(z);
    }
    return std::nullopt;
}

std::optional<long> exact_root(const Int& q, unsigned d) {
    if (sgn(q) <= 0)
        return std::nullopt;
    Int root;
    int exactness = mpz_root(root.get_mpz_t(), q.get_mpz_t(), d);
    if (!exactness)
        return std::nullopt;
    if (!root.fits_slong_p())
        return std::nullopt;
    return root.get_si();
}

bool divides_exactly(long long a, long long b) { return a != 0 && b % a == 0; }
bool divides_exactly(const Int& a, const Int& b) {
    return sgn(a) != 0 && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t());
}

long long to_num(long v, long long) { return v; }
Int to_num(long v, const Int&) { return Int(v); }

template <class Num>
class EqDfs {
public:
    EqDfs(const EquationProblem& prob, const EquationDfsConfig& cfg,
          const std::function<bool(const std::vector<long>&)>& cb)
        : prob_(prob), cfg_(cfg), cb_(cb) {}

    DfsStatus run(std::uint64_t* nodes_out) {
        init();
        DfsStatus st = descend(0);
        if (nodes_out)
            *nodes_out = nodes_;
        return st;
    }

private:
    struct TermState {
        Num assigned;          // coeff times assigned variable powers
        Num ulo, uhi;          // bounds of the unassigned part (each >= 1)
        Num lo, hi;            // current contribution bounds
        int unassigned = 0;    // distinct unassigned variables
        unsigned udegree = 0;  // total degree over unassigned variables
        long assigned_ord = 0; // prune bookkeeping
    };

    void init() {
        long dlo = cfg_.domain.min_value();
        long dhi = cfg_.domain.max_value();
        nvars_ = static_cast<int>(prob_.vars.size());
        values_.assign(static_cast<std::size_t>(nvars_), 0);
        var_terms_.assign(static_cast<std::size_t>(nvars_), {});
        if (cfg_.require_distinct)
            used_.assign(static_cast<std::size_t>(dhi) + 1, 0);

        total_lo_ = Num(0);
        total_hi_ = Num(0);
        complete_ = Num(0);

        for (std::size_t ti = 0; ti < prob_.terms.size(); ++ti) {
            const auto& term = prob_.terms[ti];
            TermState st;
            st.assigned = to_int_coeff(term.coeff);
            st.ulo = Num(1);
            st.uhi = Num(1);
            st.unassigned = static_cast<int>(term.factors.size());
            st.udegree = term.degree;
            for (const auto& [vi, e] : term.factors) {
                var_terms_[static_cast<std::size_t>(vi)].push_back({static_cast<int>(ti), e});
                st.ulo *= num_pow(to_num(dlo, Num()), e);
                st.uhi *= num_pow(to_num(dhi, Num()), e);
            }
            set_bounds(st);
            total_lo_ += st.lo;
            total_hi_ += st.hi;
            if (st.unassigned == 0)
                complete_ += st.assigned;
            terms_.push_back(std::move(st));
            if (cfg_.prune)
                coeff_ord_.push_back(ord_of(to_int_coeff(term.coeff), prune_p()));
        }

        // solve strategy for the last variable
        solve_exp_ = 0;
        if (nvars_ > 0) {
            unsigned shared = 0;
            bool uniform = true;
            for (const auto& [ti, e] : var_terms_[static_cast<std::size_t>(nvars_ - 1)]) {
                if (shared == 0)
                    shared = e;
                else if (shared != e)
                    uniform = false;
            }
            if (uniform && shared >= 1) {
                // the exponent is uniform; require the last variable to be the
                // term's only unassigned variable at solve time (always true at
                // depth nvars-1)
                solve_exp_ = shared;
            }
        }
    }

    Num to_int_coeff(const Int& c) const { return coeff_cast(c, Num()); }
    static long long coeff_cast(const Int& c, long long) { return c.get_si(); }
    static Int coeff_cast(const Int& c, const Int&) { return c; }

    Num prune_p() const { return coeff_cast(cfg_.prune->p, Num()); }

    static void set_bounds(TermState& st) {
        if (st.unassigned == 0) {
            st.lo = st.assigned;
            st.hi = st.assigned;
        } else if (st.assigned >= Num(0)) {
            st.lo = st.assigned * st.ulo;
            st.hi = st.assigned * st.uhi;
        } else {
            st.lo = st.assigned * st.uhi;
            st.hi = st.assigned * st.ulo;
        }
    }

    bool budget_spent() { return ++nodes_ > cfg_.budget; }

    // True: the subtree cannot contain a zero of the equation. Inside one
    // color class every variable valuation is congruent to the class index
    // mod the modulus, so each incomplete term's possible valuations lie in
    // one residue class with a known minimum. The partial sum S of the
    // complete terms has an exact valuation v. Two sound cuts:
    //  (a) if the residues of S and of all incomplete terms are pairwise
    //      distinct mod the modulus, every realization has pairwise distinct
    //      valuations, so the total has the finite minimum valuation;
    //  (b) if at most one term can reach a valuation <= v and it cannot tie
    //      with v, the minimum is attained uniquely.
    bool ultrametric_cut() const {
        if (!cfg_.prune || complete_ == Num(0))
            return false;
        long modulus = cfg_.prune->modulus;
        long v = ord_of(complete_, prune_p());
        long vres = v % modulus;

        bool residues_distinct = true;
        unsigned long seen = 1ul << vres; // residue of S
        int reachable = 0;
        long cand = 0;
        for (std::size_t ti = 0; ti < terms_.size(); ++ti) {
            const TermState& st = terms_[ti];
            if (st.unassigned == 0)
                continue;
            long d = coeff_ord_[ti] + st.assigned_ord +
                     static_cast<long>(st.udegree) * cfg_.prune->color_class;
            if (residues_distinct && modulus <= 60) {
                unsigned long bit = 1ul << (((d % modulus) + modulus) % modulus);
                if (seen & bit)
                    residues_distinct = false;
                seen |= bit;
            } else {
                residues_distinct = false;
            }
            if (d <= v && reachable < 2) {
                ++reachable;
                cand = d;
            }
        }
        if (residues_distinct)
            return true;
        if (reachable == 0)
            return true;
        if (reachable >= 2)
            return false;
        return (v - cand) % modulus != 0;
    }

    struct Undo {
        int term;
        TermState saved;
    };

    void assign(int vi, long x) {
        values_[static_cast<std::size_t>(vi)] = x;
        if (cfg_.require_distinct)
            used_[static_cast<std::size_t>(x)] = 1;
        long dlo = cfg_.domain.min_value();
        long dhi = cfg_.domain.max_value();
        for (const auto& [ti, e] : var_terms_[static_cast<std::size_t>(vi)]) {
            TermState& st = terms_[static_cast<std::size_t>(ti)];
            undo_.push_back({ti, st});
            total_lo_ -= st.lo;
            total_hi_ -= st.hi;
            st.assigned *= num_pow(to_num(x, Num()), e);
            st.ulo /= num_pow(to_num(dlo, Num()), e);
            st.uhi /= num_pow(to_num(dhi, Num()), e);
            st.unassigned -= 1;
            st.udegree -= e;
            if (cfg_.prune)
                st.assigned_ord += static_cast<long>(e) * ord_of(to_num(x, Num()), prune_p());
            set_bounds(st);
            total_lo_ += st.lo;
            total_hi_ += st.hi;
            if (st.unassigned == 0)
                complete_ += st.assigned;
        }
    }

    void unassign(int vi, std::size_t undo_mark) {
        if (cfg_.require_distinct)
            used_[static_cast<std::size_t>(values_[static_cast<std::size_t>(vi)])] = 0;
        while (undo_.size() > undo_mark) {
            const Undo& u = undo_.back();
            TermState& st = terms_[static_cast<std::size_t>(u.term)];
            if (st.unassigned == 0)
                complete_ -= st.assigned;
            total_lo_ -= st.lo;
            total_hi_ -= st.hi;
            st = u.saved;
            total_lo_ += st.lo;
            total_hi_ += st.hi;
            undo_.pop_back();
        }
    }

    DfsStatus emit() {
        if (!cb_(values_))
            return DfsStatus::Stopped;
        return DfsStatus::Complete;
    }

    DfsStatus try_last(long z) {
        if (budget_spent())
            return DfsStatus::BudgetExceeded;
        if (z < 1 || !cfg_.domain.contains(z))
            return DfsStatus::Complete;
        if (cfg_.require_distinct && used_[static_cast<std::size_t>(z)])
            return DfsStatus::Complete;
        int vi = nvars_ - 1;
        std::size_t mark = undo_.size();
        assign(vi, z);
        DfsStatus st = (complete_ == Num(0)) ? emit() : DfsStatus::Complete;
        unassign(vi, mark);
        return st;
    }

    DfsStatus solve_last() {
        // equation reduces to A * z^d + B with d = solve_exp_
        Num a(0);
        const auto& zterms = var_terms_[static_cast<std::size_t>(nvars_ - 1)];
        for (const auto& [ti, e] : zterms)
            a += terms_[static_cast<std::size_t>(ti)].assigned;
        const Num& b = complete_;
        if (a == Num(0)) {
            if (b != Num(0))
                return DfsStatus::Complete;
            // every domain value solves; enumerate them
            for (long i = 0; i < cfg_.domain.size(); ++i) {
                DfsStatus st = try_last(cfg_.domain.value_at(i));
                if (st != DfsStatus::Complete)
                    return st;
            }
            return DfsStatus::Complete;
        }
        Num target = -b;
        if (!divides_exactly(a, target))
            return bump_node();
        Num q = target / a;
        if (solve_exp_ == 1) {
            if (q < Num(1) || q > to_num(cfg_.domain.max_value(), Num()))
                return bump_node();
            return try_last(num_to_long(q));
        }
        auto root = exact_root(q, solve_exp_);
        if (!root)
            return bump_node();
        return try_last(*root);
    }

    DfsStatus bump_node() {
        if (budget_spent())
            return DfsStatus::BudgetExceeded;
        return DfsStatus::Complete;
    }

    static long num_to_long(long long v) { return static_cast<long>(v); }
    static long num_to_long(const Int& v) { return v.get_si(); }

    DfsStatus descend(int depth) {
        if (depth == nvars_) {
            if (budget_spent())
                return DfsStatus::BudgetExceeded;
            return complete_ == Num(0) ? emit() : DfsStatus::Complete;
        }
        if (depth == nvars_ - 1 && solve_exp_ >= 1)
            return solve_last();

        for (long i = 0; i < cfg_.domain.size(); ++i) {
            long x = cfg_.domain.value_at(i);
            if (cfg_.require_distinct && used_[static_cast<std::size_t>(x)])
                continue;
            if (budget_spent())
                return DfsStatus::BudgetExceeded;
            std::size_t mark = undo_.size();
            assign(depth, x);
            bool cut = total_lo_ > Num(0) || total_hi_ < Num(0) || ultrametric_cut();
            DfsStatus st = cut ? DfsStatus::Complete : descend(depth + 1);
            unassign(depth, mark);
            if (st != DfsStatus::Complete)
                return st;
        }
        return DfsStatus::Complete;
    }

    const EquationProblem& prob_;
    const EquationDfsConfig& cfg_;
    const std::function<bool(const std::vector<long>&)>& cb_;

    int nvars_ = 0;
    std::vector<TermState> terms_;
    std::vector<std::vector<std::pair<int, unsigned>>> var_terms_;
    std::vector<long> coeff_ord_;
    std::vector<long> values_;
    std::vector<char> used_;
    std::vector<Undo> undo_;
    Num total_lo_{0}, total_hi_{0}, complete_{0};
    unsigned solve_exp_ = 0;
    std::uint64_t nodes_ = 0;
};

// int64 viability: every term bound and their sum stay far below 2^63
bool fits_int64(const EquationProblem& prob, const EquationDfsConfig& cfg) {
    if (cfg.domain.empty())
        return true;
    if (cfg.prune && !cfg.prune->p.fits_slong_p())
        return false;
    Int limit = (Int(1) << 62) / static_cast<long>(prob.terms.size() + 1);
    Int hi(cfg.domain.max_value());
    for (const auto& t : prob.terms) {
        Int bound = abs(t.coeff) * int_pow(hi, t.degree);
        if (bound > limit)
            return false;
    }
    return true;
}

} // namespace

DfsStatus run_equation_dfs(const EquationProblem& problem, const EquationDfsConfig& config,
                           const std::function<bool(const std::vector<long>&)>& on_solution,
                           std::uint64_t* nodes_out) {
    if (config.domain.empty()) {
        if (problem.vars.empty()) {
            // constant equation: solution iff the constant sum is zero
            Int sum(0);
            for (const auto& t : problem.terms)
                sum += t.coeff;
            if (sum == 0)
                on_solution({});
        }
        if (nodes_out)
            *nodes_out = 0;
        return DfsStatus::Complete;
    }
    if (fits_int64(problem, config)) {
        EqDfs<long long> dfs(problem, config, on_solution);
        return dfs.run(nodes_out);
    }
    EqDfs<Int> dfs(problem, config, on_solution);
    return dfs.run(nodes_out);
}

PatternProblem PatternProblem::build(const PatternSpec& spec) {
    spec.validate();
    PatternProblem out;
    out.vars = spec.free_vars;
    std::sort(out.vars.begin(), out.vars.end());
    out.vars.erase(std::unique(out.vars.begin(), out.vars.end()), out.vars.end());
    out.terms = spec.terms;
    out.constraints = spec.constraints;
    return out;
}

namespace {

int ready_depth(const std::vector<VarId>& vars, const std::set<VarId>& needed) {
    int depth = 0;
    for (const auto& v : needed) {
        auto it = std::lower_bound(vars.begin(), vars.end(), v);
        depth = std::max(depth, static_cast<int>(it - vars.begin()) + 1);
    }
    return depth; // number of assigned variables required
}

class PatternDfs {
public:
    PatternDfs(const PatternProblem& prob, const PatternDfsConfig& cfg,
               const std::function<bool(const std::vector<long>&, const std::vector<Int>&)>& cb)
        : prob_(prob), cfg_(cfg), cb_(cb) {}

    DfsStatus run(std::uint64_t* nodes_out) {
        nvars_ = static_cast<int>(prob_.vars.size());
        values_.assign(static_cast<std::size_t>(nvars_), 0);
        term_values_.assign(prob_.terms.size(), Int(0));
        terms_at_.assign(static_cast<std::size_t>(nvars_) + 1, {});
        constraints_at_.assign(static_cast<std::size_t>(nvars_) + 1, {});
        for (std::size_t ti = 0; ti < prob_.terms.size(); ++ti)
            terms_at_[static_cast<std::size_t>(ready_depth(prob_.vars, prob_.terms[ti].variables()))]
                .push_back(static_cast<int>(ti));
        for (std::size_t ci = 0; ci < prob_.constraints.size(); ++ci)
            constraints_at_[static_cast<std::size_t>(constraint_depth(prob_.constraints[ci]))]
                .push_back(static_cast<int>(ci));

        DfsStatus st;
        if (!check_depth(0))
            st = DfsStatus::Complete; // a variable-free term already fails
        else
            st = descend(0);
        if (nodes_out)
            *nodes_out = nodes_;
        return st;
    }

private:
    int constraint_depth(const PatternConstraint& c) const {
        std::set<VarId> needed;
        if (const auto* pos = std::get_if<Positivity>(&c)) {
            needed = pos->term.variables();
        } else if (const auto* d = std::get_if<Distinct>(&c)) {
            needed = d->a.variables();
            for (const auto& v : d->b.variables())
                needed.insert(v);
        } else if (const auto* dv = std::get_if<Divides>(&c)) {
            needed.insert(dv->var);
        }
        return ready_depth(prob_.vars, needed);
    }

    bool constraint_ok(const PatternConstraint& c) const {
        if (const auto* pos = std::get_if<Positivity>(&c))
            return pos->term.evaluate(assignment_).sign() > 0;
        if (const auto* d = std::get_if<Distinct>(&c))
            return d->a.evaluate(assignment_) != d->b.evaluate(assignment_);
        const auto& dv = std::get<Divides>(c);
        Int v = assignment_.at(dv.var).as_integer();
        return mpz_divisible_p(v.get_mpz_t(), dv.k.get_mpz_t()) != 0;
    }

    // evaluate terms and constraints that became ready; false rejects the node
    bool check_depth(int assigned_count) {
        for (int ti : terms_at_[static_cast<std::size_t>(assigned_count)]) {
            Rational v = prob_.terms[static_cast<std::size_t>(ti)].evaluate(assignment_);
            if (!v.is_integer())
                return false;
            Int value = v.as_integer();
            if (value < 1 || value > cfg_.n)
                return false;
            if (cfg_.coloring) {
                int color = cfg_.coloring->color(value);
                if (mono_color_ == -1)
                    mono_color_ = color;
                else if (color != mono_color_)
                    return false;
            }
            term_values_[static_cast<std::size_t>(ti)] = value;
        }
        for (int ci : constraints_at_[static_cast<std::size_t>(assigned_count)])
            if (!constraint_ok(prob_.constraints[static_cast<std::size_t>(ci)]))
                return false;
        if (cfg_.require_distinct) {
            // all term values evaluated so far must be pairwise distinct
            for (int ti : terms_at_[static_cast<std::size_t>(assigned_count)])
                for (std::size_t tj = 0; tj < prob_.terms.size(); ++tj)
                    if (static_cast<int>(tj) != ti &&
                        term_ready(static_cast<int>(tj), assigned_count) &&
                        term_values_[tj] == term_values_[static_cast<std::size_t>(ti)])
                        return false;
        }
        return true;
    }

    bool term_ready(int ti, int assigned_count) const {
        for (int depth = 0; depth <= assigned_count; ++depth)
            for (int t : terms_at_[static_cast<std::size_t>(depth)])
                if (t == ti)
                    return true;
        return false;
    }

    DfsStatus descend(int depth) {
        if (depth == nvars_) {
            if (!cb_(values_, term_values_))
                return DfsStatus::Stopped;
            return DfsStatus::Complete;
        }
        long lo = 1, hi = cfg_.n;
        if (depth == 0) {
            lo = cfg_.first_var_lo;
            hi = cfg_.first_var_hi > 0 ? cfg_.first_var_hi : cfg_.n;
        }
        const VarId& var = prob_.vars[static_cast<std::size_t>(depth)];
        for (long x = lo; x <= hi; ++x) {
            if (++nodes_ > cfg_.budget)
                return DfsStatus::BudgetExceeded;
            values_[static_cast<std::size_t>(depth)] = x;
            assignment_.insert_or_assign(var, Rational(Int(x)));
            int saved_color = mono_color_;
            DfsStatus st = check_depth(depth + 1) ? descend(depth + 1) : DfsStatus::Complete;
            mono_color_ = saved_color;
            if (st != DfsStatus::Complete) {
                assignment_.erase(var);
                return st;
            }
        }
        assignment_.erase(var);
        return DfsStatus::Complete;
    }

    const PatternProblem& prob_;
    const PatternDfsConfig& cfg_;
    const std::function<bool(const std::vector<long>&, const std::vector<Int>&)>& cb_;

    int nvars_ = 0;
    std::vector<long> values_;
    std::vector<Int> term_values_;
    std::vector<std::vector<int>> terms_at_;
    std::vector<std::vector<int>> constraints_at_;
    std::map<VarId, Rational> assignment_;
    int mono_color_ = -1;
    std::uint64_t nodes_ = 0;
};

} // namespace

DfsStatus run_pattern_dfs(const PatternProblem& problem, const PatternDfsConfig& config,
                          const std::function<bool(const std::vector<long>&, const std::vector<Int>&)>& on_instance,
                          std::uint64_t* nodes_out) {
    PatternDfs dfs(problem, config, on_instance);
    return dfs.run(nodes_out);
}

} // namespace ramsey::detail
