#include "ramsey/search.hpp"

#include <atomic>
#include <cmath>
#include <thread>

namespace ramsey {

namespace {

// Immutable per-run view: instances as sorted value sets, grouped by their
// largest element.
struct ColoringSearch {
    long n;
    int colors;
    std::vector<std::vector<long>> instances;
    std::vector<std::vector<int>> by_max;

    ColoringSearch(const Target& target, int r, long n_, bool require_distinct) : n(n_), colors(r) {
        EnumerationPolicy policy;
        policy.require_distinct = require_distinct;
        for (auto& inst : enumerate_instances(target, n, policy))
            instances.push_back(std::move(inst.values));
        by_max.assign(static_cast<std::size_t>(n) + 1, {});
        for (std::size_t i = 0; i < instances.size(); ++i)
            by_max[static_cast<std::size_t>(instances[i].back())].push_back(static_cast<int>(i));
    }

    // true when assigning `value` keeps every instance ending at `value`
    // non-monochromatic
    bool consistent(const std::vector<int>& assignment, long value) const {
        for (int idx : by_max[static_cast<std::size_t>(value)]) {
            const auto& values = instances[static_cast<std::size_t>(idx)];
            int c = assignment[static_cast<std::size_t>(values.front()) - 1];
            bool mono = true;
            for (std::size_t k = 1; k < values.size() && mono; ++k)
                mono = assignment[static_cast<std::size_t>(values[k]) - 1] == c;
            if (mono)
                return false;
        }
        return true;
    }
};

enum class SubtreeKind { Bad, Forced, Capped };

struct SubtreeResult {
    SubtreeKind kind = SubtreeKind::Forced;
    std::vector<int> coloring;
    std::uint64_t nodes = 0;
};

// DFS below a fixed prefix; first complete coloring found is the subtree's
// lexicographically least.
SubtreeResult explore(const ColoringSearch& search, std::vector<int> assignment, long from,
                      std::uint64_t budget) {
    SubtreeResult result;
    if (from > search.n) {
        result.kind = SubtreeKind::Bad;
        result.coloring = std::move(assignment);
        return result;
    }
    std::vector<int> choice(static_cast<std::size_t>(search.n) + 1, -1);
    long v = from;
    while (true) {
        int c = ++choice[static_cast<std::size_t>(v)];
        if (c >= search.colors) {
            choice[static_cast<std::size_t>(v)] = -1;
            --v;
            if (v < from) {
                result.kind = SubtreeKind::Forced;
                return result;
            }
            continue;
        }
        if (++result.nodes > budget) {
            result.kind = SubtreeKind::Capped;
            return result;
        }
        assignment[static_cast<std::size_t>(v) - 1] = c;
        if (!search.consistent(assignment, v))
            continue;
        if (v == search.n) {
            result.kind = SubtreeKind::Bad;
            result.coloring = std::move(assignment);
            return result;
        }
        ++v;
    }
}

// All avoidance-consistent colorings of [1, prefix_len] with color(1) = 0,
// in lexicographic order. False return: node budget exhausted.
bool consistent_prefixes(const ColoringSearch& search, long prefix_len, std::uint64_t budget,
                         std::uint64_t* nodes, std::vector<std::vector<int>>& out) {
    std::vector<int> assignment(static_cast<std::size_t>(search.n), -1);
    std::vector<int> choice(static_cast<std::size_t>(prefix_len) + 1, -1);
    long v = 1;
    while (v >= 1) {
        int c = ++choice[static_cast<std::size_t>(v)];
        int limit = (v == 1) ? 1 : search.colors; // symmetry: color(1) = 0
        if (c >= limit) {
            choice[static_cast<std::size_t>(v)] = -1;
            --v;
            continue;
        }
        if (++*nodes > budget)
            return false;
        assignment[static_cast<std::size_t>(v) - 1] = c;
        if (!search.consistent(assignment, v))
            continue;
        if (v == prefix_len) {
            out.emplace_back(assignment.begin(), assignment.begin() + prefix_len);
            continue;
        }
        ++v;
    }
    return true;
}

long prefix_depth(long n, int colors) {
    // roughly 4096 prefixes regardless of color count
    long depth = 1;
    double width = 1;
    while (depth < n && width * colors <= 4096.0) {
        width *= colors;
        ++depth;
    }
    return depth;
}

} // namespace

SearchResult find_bad_coloring(const Target& target, int colors, long n, const SearchOptions& options) {
    if (colors < 1)
        throw Error(ErrorKind::BadParameters, "need at least one color");
    if (n < 1)
        throw Error(ErrorKind::BadParameters, "need N >= 1");

    ColoringSearch search(target, colors, n, options.require_distinct);
    SearchResult result;
    result.n = n;

    long depth = prefix_depth(n, colors);
    std::vector<std::vector<int>> prefixes;
    if (!consistent_prefixes(search, depth, options.budget, &result.nodes, prefixes)) {
        result.kind = SearchResult::Kind::CapExceeded;
        return result;
    }
    if (prefixes.empty()) {
        result.kind = SearchResult::Kind::AllForced;
        return result;
    }
    if (depth >= n) {
        // prefixes are complete colorings; the first is the least
        result.kind = SearchResult::Kind::BadColoring;
        result.coloring = Coloring::table(prefixes.front(), colors);
        return result;
    }

    std::uint64_t per_prefix = options.budget == UINT64_MAX
                                   ? UINT64_MAX
                                   : std::max<std::uint64_t>(1, options.budget / prefixes.size());

    std::vector<SubtreeResult> results(prefixes.size());
    std::atomic<long> best_bad{static_cast<long>(prefixes.size())};
    std::atomic<std::size_t> next{0};

    auto work = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= prefixes.size())
                return;
            if (static_cast<long>(i) > best_bad.load())
                continue; // cannot affect the reduction
            std::vector<int> assignment(static_cast<std::size_t>(n), -1);
            std::copy(prefixes[i].begin(), prefixes[i].end(), assignment.begin());
            results[i] = explore(search, std::move(assignment), depth + 1, per_prefix);
            if (results[i].kind == SubtreeKind::Bad) {
                long expected = best_bad.load();
                while (static_cast<long>(i) < expected &&
                       !best_bad.compare_exchange_weak(expected, static_cast<long>(i))) {
                }
            }
        }
    };

    int workers = std::max(1, std::min<int>(options.workers, static_cast<int>(prefixes.size())));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(work);
        for (auto& t : pool)
            t.join();
    }

    // Deterministic reduction over the fixed prefix order: the least-index
    // bad coloring wins (a found coloring is definitive even if some other
    // subtree hit its cap); otherwise any cap forbids the AllForced verdict.
    bool capped = false;
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
        result.nodes += results[i].nodes;
        if (results[i].kind == SubtreeKind::Capped)
            capped = true;
        if (results[i].kind == SubtreeKind::Bad && !result.coloring) {
            result.kind = SearchResult::Kind::BadColoring;
            result.coloring = Coloring::table(results[i].coloring, colors);
        }
    }
    if (result.coloring)
        return result;
    result.kind = capped ? SearchResult::Kind::CapExceeded : SearchResult::Kind::AllForced;
    return result;
}

LeastForcingResult least_forcing_N(const Target& target, int colors, long cap,
                                   const SearchOptions& options) {
    LeastForcingResult out;
    for (long n = 1; n <= cap; ++n) {
        SearchResult r = find_bad_coloring(target, colors, n, options);
        out.nodes += r.nodes;
        if (r.kind == SearchResult::Kind::AllForced) {
            out.kind = LeastForcingResult::Kind::Found;
            out.n = n;
            return out;
        }
        if (r.kind == SearchResult::Kind::CapExceeded) {
            out.kind = LeastForcingResult::Kind::CapExceeded;
            out.n = n;
            return out;
        }
    }
    out.kind = LeastForcingResult::Kind::NotForcedWithinCap;
    return out;
}

} // namespace ramsey
