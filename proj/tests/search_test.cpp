#include "doctest.h"

#include <random>
#include <sstream>

#include "ramsey/family.hpp"
#include "ramsey/search.hpp"
#include "ramsey/solver.hpp"

using namespace ramsey;

namespace {

Target schur_eq() { return Target(parse_equation("x + y - z")); }
Target ap3() { return Target(instantiate_pattern({Family::VdwAp, {{"l", Rational(3)}}})); }

} // namespace

TEST_CASE("enumerate_instances: schur pattern filters x == y") {
    Target schur_pattern(instantiate_pattern({Family::Schur, {}}));
    auto instances = enumerate_instances(schur_pattern, 4);
    REQUIRE(instances.size() == 2);
    CHECK(instances[0].values == std::vector<long>{1, 2, 3});
    CHECK(instances[1].values == std::vector<long>{1, 3, 4});
    // equation route keeps x == y solutions
    auto with_repeats = enumerate_instances(schur_eq(), 4);
    CHECK(with_repeats.size() == 4); // {1,2}, {1,2,3}, {2,4}, {1,3,4}
}

TEST_CASE("enumerate_instances: pythagorean dedupes symmetric assignments") {
    auto instances = enumerate_instances(Target(instantiate_equation({Family::Pyth, {}})), 5);
    REQUIRE(instances.size() == 1);
    CHECK(instances[0].values == std::vector<long>{3, 4, 5});
    CHECK(instances[0].assignment.at(VarId("x")) == 3); // lex-least representative
}

TEST_CASE("enumerate_instances: 3-AP counts") {
    // d >= 1 inside [1,5]: d=1 gives a in {1,2,3}; d=2 gives a=1
    CHECK(enumerate_instances(ap3(), 5).size() == 4);
    CHECK(enumerate_instances(ap3(), 6).size() == 6);
}

TEST_CASE("divides and positivity constraints filter instantiations") {
    VarId a("a"), d("d");
    PatternSpec spec;
    spec.free_vars = {a, d};
    spec.terms = {Polynomial::var(a), Polynomial::var(a) + Polynomial::var(d),
                  Polynomial::var(a) + Rational(2) * Polynomial::var(d)};
    spec.constraints = {Divides{Int(3), d}};
    // same 3-APs as above but with 3 | d: at N=7 only d=3, a=1
    auto instances = enumerate_instances(Target(spec), 7);
    REQUIRE(instances.size() == 1);
    CHECK(instances[0].values == std::vector<long>{1, 4, 7});

    PatternSpec positive;
    positive.free_vars = {a, d};
    positive.terms = {Polynomial::var(a), Polynomial::var(a) + Polynomial::var(d)};
    positive.constraints = {
        Positivity{Polynomial::var(a) - Polynomial::var(d)}}; // a > d
    auto filtered = enumerate_instances(Target(positive), 4);
    for (const auto& inst : filtered)
        CHECK(inst.assignment.at(a) > inst.assignment.at(d));
    CHECK(filtered.size() == 2); // (a,d) = (2,1) and (3,1); larger a pushes a+d past 4
}

TEST_CASE("rational-coefficient terms only count when they land in Z+") {
    VarId a("a");
    PatternSpec spec;
    spec.free_vars = {a};
    spec.terms = {Polynomial::var(a), Rational(1, 2) * Polynomial::var(a)};
    auto instances = enumerate_instances(Target(spec), 10);
    // a/2 must be a positive integer, so only even a qualify
    CHECK(instances.size() == 5);
    for (const auto& inst : instances)
        CHECK(inst.assignment.at(a) % 2 == 0);
}

TEST_CASE("huge coefficients take the exact big-integer path") {
    // 2^70 x - y has no solution with y <= 100
    Equation eq = parse_equation("1180591620717411303424*x - y");
    CHECK(enumerate_instances(Target(eq), 100).empty());
    Coloring c = Coloring::table(std::vector<int>(100, 0), 1);
    CHECK(verify_avoids(Target(eq), c, 100).kind == VerifyOutcome::Kind::Ok);

    // 2^70 x - 2^70 y = 0 collapses to x = y; singleton value sets
    Equation same = parse_equation("1180591620717411303424*x - 1180591620717411303424*y");
    VerifyOutcome out = verify_avoids(Target(same), c, 5);
    REQUIRE(out.kind == VerifyOutcome::Kind::Counterexample);
    CHECK(out.counterexample->assignment.at(VarId("x")) == 1);
    CHECK(out.counterexample->assignment.at(VarId("y")) == 1);
}

TEST_CASE("find_bad_coloring on the Schur equation") {
    SearchResult at4 = find_bad_coloring(schur_eq(), 2, 4);
    REQUIRE(at4.kind == SearchResult::Kind::BadColoring);
    // lexicographically least avoiding coloring: {1,4} / {2,3}
    std::vector<int> expect{0, 1, 1, 0};
    for (long x = 1; x <= 4; ++x)
        CHECK(at4.coloring->color(x) == expect[static_cast<std::size_t>(x) - 1]);
    CHECK(verify_avoids(schur_eq(), *at4.coloring, 4).kind == VerifyOutcome::Kind::Ok);

    SearchResult at5 = find_bad_coloring(schur_eq(), 2, 5);
    CHECK(at5.kind == SearchResult::Kind::AllForced);
}

TEST_CASE("least_forcing_N: classical desk-scale numbers") {
    LeastForcingResult schur2 = least_forcing_N(schur_eq(), 2, 100);
    REQUIRE(schur2.kind == LeastForcingResult::Kind::Found);
    CHECK(schur2.n == 5); // S(2) = 4

    LeastForcingResult w32 = least_forcing_N(ap3(), 2, 100);
    REQUIRE(w32.kind == LeastForcingResult::Kind::Found);
    CHECK(w32.n == 9); // W(3,2) = 9

    SearchResult ap8 = find_bad_coloring(ap3(), 2, 8);
    REQUIRE(ap8.kind == SearchResult::Kind::BadColoring);
    CHECK(verify_avoids(ap3(), *ap8.coloring, 8).kind == VerifyOutcome::Kind::Ok);
}

TEST_CASE("weak (distinct) Schur pattern forces later than the classical one") {
    Target pattern(instantiate_pattern({Family::Schur, {}}));
    SearchResult at8 = find_bad_coloring(pattern, 2, 8);
    REQUIRE(at8.kind == SearchResult::Kind::BadColoring);
    CHECK(verify_avoids(pattern, *at8.coloring, 8).kind == VerifyOutcome::Kind::Ok);
    LeastForcingResult forced = least_forcing_N(pattern, 2, 20);
    REQUIRE(forced.kind == LeastForcingResult::Kind::Found);
    CHECK(forced.n == 9); // WS(2) = 8
}

TEST_CASE("search determinism across worker counts") {
    for (int workers : {1, 2, 4}) {
        SearchOptions opt;
        opt.workers = workers;
        SearchResult r = find_bad_coloring(ap3(), 2, 8, opt);
        REQUIRE(r.kind == SearchResult::Kind::BadColoring);
        std::vector<int> table;
        for (long x = 1; x <= 8; ++x)
            table.push_back(r.coloring->color(x));
        CHECK(table == std::vector<int>{0, 0, 1, 1, 0, 0, 1, 1});
    }
}

TEST_CASE("budget caps are reported") {
    SearchOptions opt;
    opt.budget = 2;
    SearchResult r = find_bad_coloring(ap3(), 2, 9, opt);
    CHECK(r.kind == SearchResult::Kind::CapExceeded);
}

TEST_CASE("cnf export: schur at N=3") {
    CnfInstance cnf = export_cnf(schur_eq(), 2, 3);
    CHECK(cnf.num_vars == 3);
    // instances {1,2} and {1,2,3}, two clauses each
    CHECK(cnf.clauses.size() == 4);
    std::ostringstream dimacs;
    write_dimacs(cnf, dimacs, "schur N=3");
    CHECK(dimacs.str().find("p cnf 3 4") != std::string::npos);

    std::istringstream back(dimacs.str());
    Cnf parsed = parse_dimacs(back);
    CHECK(parsed.num_vars == 3);
    CHECK(parsed.clauses.size() == 4);
}

TEST_CASE("cnf export one-hot for three colors") {
    CnfInstance cnf = export_cnf(schur_eq(), 3, 4);
    CHECK(cnf.num_vars == 12);
    CHECK(cnf.var_of(1, 0) == 1);
    CHECK(cnf.var_of(4, 2) == 12);
    auto [value, color] = cnf.value_color_of(7);
    CHECK(value == 3);
    CHECK(color == 0);
}

TEST_CASE("solve_cnf basics") {
    SatResult empty = solve_cnf(2, {});
    REQUIRE(empty.status == SatStatus::Sat);
    CHECK(empty.model[1] == 0); // all-false default

    SatResult conflict = solve_cnf(1, {{1}, {-1}});
    CHECK(conflict.status == SatStatus::Unsat);
}

TEST_CASE("cnf and backtracking engines agree at desk scale") {
    std::vector<std::pair<Target, const char*>> targets{
        {schur_eq(), "schur"},
        {ap3(), "3ap"},
        {Target(instantiate_equation({Family::Pyth, {}})), "pyth"},
    };
    for (const auto& [target, name] : targets) {
        for (int colors : {2, 3}) {
            for (long n = 1; n <= 15; ++n) {
                CAPTURE(name);
                CAPTURE(colors);
                CAPTURE(n);
                SearchResult direct = find_bad_coloring(target, colors, n);
                CnfInstance cnf = export_cnf(target, colors, n);
                SatResult sat = solve_cnf(cnf.num_vars, cnf.clauses);
                REQUIRE(direct.kind != SearchResult::Kind::CapExceeded);
                REQUIRE(sat.status != SatStatus::CapExceeded);
                bool direct_bad = direct.kind == SearchResult::Kind::BadColoring;
                CHECK(direct_bad == (sat.status == SatStatus::Sat));
                if (sat.status == SatStatus::Sat) {
                    Coloring decoded = decode_coloring(cnf, sat.model);
                    CHECK(verify_avoids(target, decoded, n).kind == VerifyOutcome::Kind::Ok);
                }
            }
        }
    }
}

TEST_CASE("schur forced at 5 via cnf") {
    CnfInstance cnf = export_cnf(schur_eq(), 2, 5);
    CHECK(solve_cnf(cnf.num_vars, cnf.clauses).status == SatStatus::Unsat);
}

TEST_CASE("decode rejects bad models") {
    CnfInstance cnf = export_cnf(schur_eq(), 2, 4);
    std::vector<std::int8_t> model(static_cast<std::size_t>(cnf.num_vars) + 1, 0);
    CHECK_THROWS_AS(decode_coloring(cnf, model), Error); // all-one-color model violates clauses

    CnfInstance onehot = export_cnf(schur_eq(), 3, 3);
    std::vector<std::int8_t> incoherent(static_cast<std::size_t>(onehot.num_vars) + 1, 0);
    CHECK_THROWS_AS(decode_coloring(onehot, incoherent), Error);
}

TEST_CASE("external model lines decode") {
    CnfInstance cnf = export_cnf(schur_eq(), 2, 4);
    SatResult sat = solve_cnf(cnf.num_vars, cnf.clauses);
    REQUIRE(sat.status == SatStatus::Sat);
    std::ostringstream lines;
    lines << "s SATISFIABLE\nv";
    for (int v = 1; v <= cnf.num_vars; ++v)
        lines << " " << (sat.model[static_cast<std::size_t>(v)] ? v : -v);
    lines << " 0\n";
    std::istringstream in(lines.str());
    auto model = parse_model(in, cnf.num_vars);
    Coloring decoded = decode_coloring(cnf, model);
    CHECK(verify_avoids(schur_eq(), decoded, 4).kind == VerifyOutcome::Kind::Ok);
}

TEST_CASE("monotonicity spot-check: forced stays forced") {
    for (long n : {5L, 6L, 7L}) {
        SearchResult r = find_bad_coloring(schur_eq(), 2, n);
        CHECK(r.kind == SearchResult::Kind::AllForced);
    }
}

TEST_CASE("solver agrees with a truth-table oracle on random instances") {
    std::mt19937_64 rng(0x0ddba11u);
    std::uniform_int_distribution<int> nvars_pick(1, 10);
    std::uniform_int_distribution<int> nclauses_pick(1, 40);
    std::uniform_int_distribution<int> width_pick(1, 3);
    for (int trial = 0; trial < 300; ++trial) {
        int nvars = nvars_pick(rng);
        int nclauses = nclauses_pick(rng);
        std::vector<std::vector<int>> clauses;
        for (int ci = 0; ci < nclauses; ++ci) {
            std::vector<int> clause;
            int width = width_pick(rng);
            for (int li = 0; li < width; ++li) {
                int var = 1 + static_cast<int>(rng() % static_cast<unsigned>(nvars));
                clause.push_back((rng() % 2) ? var : -var);
            }
            clauses.push_back(std::move(clause));
        }

        bool oracle_sat = false;
        for (unsigned assignment = 0; assignment < (1u << nvars) && !oracle_sat; ++assignment) {
            bool all = true;
            for (const auto& clause : clauses) {
                bool sat = false;
                for (int lit : clause) {
                    bool value = (assignment >> (std::abs(lit) - 1)) & 1u;
                    if ((lit > 0) == value)
                        sat = true;
                }
                if (!sat) {
                    all = false;
                    break;
                }
            }
            oracle_sat = all;
        }

        SatResult got = solve_cnf(nvars, clauses);
        REQUIRE(got.status != SatStatus::CapExceeded);
        CHECK((got.status == SatStatus::Sat) == oracle_sat);
        if (got.status == SatStatus::Sat) {
            for (const auto& clause : clauses) {
                bool sat = false;
                for (int lit : clause)
                    if ((lit > 0) == (got.model[static_cast<std::size_t>(std::abs(lit))] == 1))
                        sat = true;
                CHECK(sat);
            }
        }
    }
}

TEST_CASE("valuation prune never changes a verdict: rule vs table cross-check") {
    std::mt19937_64 rng(0xface7edu);
    std::uniform_int_distribution<long> coeff_pick(-6, 6);
    std::uniform_int_distribution<int> exp_pick(1, 2);
    std::uniform_int_distribution<int> nterms_pick(2, 4);
    const std::vector<std::pair<long, int>> rules{{2, 2}, {2, 3}, {3, 2}, {5, 2}};
    const std::vector<VarId> pool{VarId("x"), VarId("y"), VarId("z")};

    int done = 0;
    while (done < 120) {
        std::vector<Monomial> monomials;
        int nterms = nterms_pick(rng);
        for (int t = 0; t < nterms; ++t) {
            long c = coeff_pick(rng);
            if (c == 0)
                c = -1;
            Monomial m;
            m.coeff = Rational(c);
            m.exps[pool[rng() % pool.size()]] += static_cast<unsigned>(exp_pick(rng));
            monomials.push_back(std::move(m));
        }
        Polynomial poly = Polynomial::from_monomials(std::move(monomials));
        if (poly.is_zero() || poly.variables().empty())
            continue;
        ++done;
        Target target{Equation(poly)};

        auto [p, mod] = rules[rng() % rules.size()];
        long n = 20 + static_cast<long>(rng() % 21);
        Coloring rule = Coloring::padic(Int(p), mod, n);
        std::vector<int> table;
        for (long x = 1; x <= n; ++x)
            table.push_back(rule.color(x));
        Coloring explicit_table = Coloring::table(table, mod);

        VerifyOutcome with_prune = verify_avoids(target, rule, n);
        VerifyOutcome without_prune = verify_avoids(target, explicit_table, n);
        REQUIRE(with_prune.kind == without_prune.kind);
        if (with_prune.kind == VerifyOutcome::Kind::Counterexample)
            CHECK(with_prune.counterexample->assignment == without_prune.counterexample->assignment);
    }
}
