#include "ramsey/enumerate.hpp"

#include <set>

#include "engine.hpp"

namespace ramsey {

std::vector<Instance> enumerate_instances(const Target& target, long n, const EnumerationPolicy& policy) {
    if (n < 1)
        throw Error(ErrorKind::BadParameters, "need N >= 1");
    std::vector<Instance> out;
    std::set<std::vector<long>> seen;

    if (const auto* eq = std::get_if<Equation>(&target)) {
        detail::EquationProblem problem = detail::EquationProblem::build(*eq);
        detail::EquationDfsConfig config;
        config.domain.lo = 1;
        config.domain.hi = n;
        config.require_distinct = policy.require_distinct;
        detail::run_equation_dfs(problem, config, [&](const std::vector<long>& values) {
            std::vector<long> key(values);
            std::sort(key.begin(), key.end());
            key.erase(std::unique(key.begin(), key.end()), key.end());
            if (seen.insert(key).second) {
                Instance inst;
                for (std::size_t i = 0; i < problem.vars.size(); ++i)
                    inst.assignment.emplace(problem.vars[i], Int(values[i]));
                inst.values = std::move(key);
                out.push_back(std::move(inst));
            }
            return true;
        });
        return out;
    }

    const auto& pattern = std::get<PatternSpec>(target);
    detail::PatternProblem problem = detail::PatternProblem::build(pattern);
    detail::PatternDfsConfig config;
    config.n = n;
    config.require_distinct = policy.require_distinct;
    detail::run_pattern_dfs(problem, config,
                            [&](const std::vector<long>& values, const std::vector<Int>& term_values) {
                                std::vector<long> key;
                                key.reserve(term_values.size());
                                for (const auto& v : term_values)
                                    key.push_back(v.get_si());
                                std::sort(key.begin(), key.end());
                                key.erase(std::unique(key.begin(), key.end()), key.end());
                                if (seen.insert(key).second) {
                                    Instance inst;
                                    for (std::size_t i = 0; i < problem.vars.size(); ++i)
                                        inst.assignment.emplace(problem.vars[i], Int(values[i]));
                                    inst.values = std::move(key);
                                    out.push_back(std::move(inst));
                                }
                                return true;
                            });
    return out;
}

} // namespace ramsey
