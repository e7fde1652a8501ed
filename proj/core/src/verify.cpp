#include "ramsey/verify.hpp"

#include <atomic>
#include <thread>

#include "engine.hpp"

namespace ramsey {

namespace {

struct UnitResult {
    bool capped = false;
    std::optional<Counterexample> cex;
    std::uint64_t nodes = 0;
};

bool assignment_less(const Counterexample& a, const Counterexample& b) {
    auto ia = a.assignment.begin();
    auto ib = b.assignment.begin();
    for (; ia != a.assignment.end() && ib != b.assignment.end(); ++ia, ++ib) {
        if (ia->second != ib->second)
            return ia->second < ib->second;
    }
    return false;
}

// A found counterexample is definitive evidence even when another unit hit
// its cap (the least-found guarantee is then over the explored portion, which
// is deterministic because the per-unit budgets are fixed). BudgetExceeded is
// reported only when nothing was found and some unit was cut short.
VerifyOutcome reduce_units(std::vector<UnitResult> units) {
    VerifyOutcome out;
    bool capped = false;
    for (auto& u : units) {
        out.nodes += u.nodes;
        capped = capped || u.capped;
        if (u.cex && (!out.counterexample || assignment_less(*u.cex, *out.counterexample)))
            out.counterexample = std::move(u.cex);
    }
    if (out.counterexample)
        out.kind = VerifyOutcome::Kind::Counterexample;
    else if (capped)
        out.kind = VerifyOutcome::Kind::BudgetExceeded;
    else
        out.kind = VerifyOutcome::Kind::Ok;
    return out;
}

void run_units(int total, int workers, const std::function<void(int)>& work) {
    workers = std::max(1, std::min(workers, total));
    if (workers == 1) {
        for (int i = 0; i < total; ++i)
            work(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                int i = next.fetch_add(1);
                if (i >= total)
                    return;
                work(i);
            }
        });
    }
    for (auto& t : pool)
        t.join();
}

VerifyOutcome verify_equation(const Equation& eq, const Coloring& coloring, long n,
                              const VerifyPolicy& policy) {
    detail::EquationProblem problem = detail::EquationProblem::build(eq);
    int classes = coloring.colors();
    std::vector<std::vector<long>> domains(static_cast<std::size_t>(classes));
    for (int c = 0; c < classes; ++c) {
        auto full = coloring.color_class(c);
        auto& mine = domains[static_cast<std::size_t>(c)];
        for (long v : full)
            if (v <= n)
                mine.push_back(v);
    }
    std::uint64_t unit_budget =
        policy.budget == UINT64_MAX ? UINT64_MAX : std::max<std::uint64_t>(1, policy.budget / static_cast<std::uint64_t>(classes));

    std::vector<UnitResult> units(static_cast<std::size_t>(classes));
    run_units(classes, policy.workers, [&](int c) {
        auto& unit = units[static_cast<std::size_t>(c)];
        const auto& domain = domains[static_cast<std::size_t>(c)];
        if (domain.empty())
            return;
        detail::EquationDfsConfig config;
        config.domain.values = &domain;
        config.require_distinct = policy.require_distinct;
        config.budget = unit_budget;
        if (coloring.is_padic_rule())
            config.prune = detail::UltrametricPrune{coloring.p(), coloring.modulus(), c};
        detail::DfsStatus status = detail::run_equation_dfs(
            problem, config,
            [&](const std::vector<long>& values) {
                Counterexample cex;
                for (std::size_t i = 0; i < problem.vars.size(); ++i) {
                    cex.assignment.emplace(problem.vars[i], Int(values[i]));
                    cex.term_values.push_back(Int(values[i]));
                }
                cex.color = c;
                unit.cex = std::move(cex);
                return false; // ascending enumeration: first hit is the class least
            },
            &unit.nodes);
        unit.capped = status == detail::DfsStatus::BudgetExceeded;
    });
    return reduce_units(std::move(units));
}

VerifyOutcome verify_pattern(const PatternSpec& pattern, const Coloring& coloring, long n,
                             const VerifyPolicy& policy) {
    detail::PatternProblem problem = detail::PatternProblem::build(pattern);
    long num_units = std::min<long>(n, 16);
    long chunk = (n + num_units - 1) / num_units;
    std::uint64_t unit_budget =
        policy.budget == UINT64_MAX ? UINT64_MAX : std::max<std::uint64_t>(1, policy.budget / static_cast<std::uint64_t>(num_units));

    std::vector<UnitResult> units(static_cast<std::size_t>(num_units));
    run_units(static_cast<int>(num_units), policy.workers, [&](int u) {
        auto& unit = units[static_cast<std::size_t>(u)];
        detail::PatternDfsConfig config;
        config.n = n;
        config.first_var_lo = 1 + static_cast<long>(u) * chunk;
        config.first_var_hi = std::min(n, config.first_var_lo + chunk - 1);
        if (config.first_var_lo > n)
            return;
        config.require_distinct = policy.require_distinct;
        config.budget = unit_budget;
        config.coloring = &coloring;
        detail::DfsStatus status = detail::run_pattern_dfs(
            problem, config,
            [&](const std::vector<long>& values, const std::vector<Int>& term_values) {
                Counterexample cex;
                for (std::size_t i = 0; i < problem.vars.size(); ++i)
                    cex.assignment.emplace(problem.vars[i], Int(values[i]));
                cex.term_values = term_values;
                cex.color = coloring.color(term_values.front());
                unit.cex = std::move(cex);
                return false;
            },
            &unit.nodes);
        unit.capped = status == detail::DfsStatus::BudgetExceeded;
    });
    return reduce_units(std::move(units));
}

} // namespace

VerifyOutcome verify_avoids(const Target& target, const Coloring& coloring, long n,
                            const VerifyPolicy& policy) {
    if (n < 1 || n > coloring.domain_size())
        throw Error(ErrorKind::BadParameters,
                    "N must lie in [1, coloring domain " + std::to_string(coloring.domain_size()) + "]");
    if (const auto* eq = std::get_if<Equation>(&target))
        return verify_equation(*eq, coloring, n, policy);
    return verify_pattern(std::get<PatternSpec>(target), coloring, n, policy);
}

bool counterexample_valid(const Target& target, const Coloring& coloring, long n,
                          const Counterexample& cex, bool require_distinct) {
    std::map<VarId, Rational> values;
    for (const auto& [v, x] : cex.assignment) {
        if (x < 1 || x > n)
            return false;
        values.emplace(v, Rational(x));
    }
    if (const auto* eq = std::get_if<Equation>(&target)) {
        if (!eq->lhs().evaluate(values).is_zero())
            return false;
        int color = -1;
        for (const auto& [v, x] : cex.assignment) {
            int c = coloring.color(x);
            if (color == -1)
                color = c;
            if (c != color || c != cex.color)
                return false;
        }
        if (require_distinct) {
            std::set<Int> distinct;
            for (const auto& [v, x] : cex.assignment)
                if (!distinct.insert(x).second)
                    return false;
        }
        return true;
    }
    const auto& pattern = std::get<PatternSpec>(target);
    if (cex.term_values.size() != pattern.terms.size())
        return false;
    int color = -1;
    for (std::size_t i = 0; i < pattern.terms.size(); ++i) {
        Rational tv = pattern.terms[i].evaluate(values);
        if (!tv.is_integer())
            return false;
        Int value = tv.as_integer();
        if (value != cex.term_values[i] || value < 1 || value > n)
            return false;
        int c = coloring.color(value);
        if (color == -1)
            color = c;
        if (c != color || c != cex.color)
            return false;
    }
    for (const auto& constraint : pattern.constraints) {
        if (const auto* pos = std::get_if<Positivity>(&constraint)) {
            if (pos->term.evaluate(values).sign() <= 0)
                return false;
        } else if (const auto* d = std::get_if<Distinct>(&constraint)) {
            if (d->a.evaluate(values) == d->b.evaluate(values))
                return false;
        } else if (const auto* dv = std::get_if<Divides>(&constraint)) {
            Int v = values.at(dv->var).as_integer();
            if (!mpz_divisible_p(v.get_mpz_t(), dv->k.get_mpz_t()))
                return false;
        }
    }
    if (require_distinct) {
        std::set<Int> distinct;
        for (const auto& tv : cex.term_values)
            if (!distinct.insert(tv).second)
                return false;
    }
    return true;
}

} // namespace ramsey
