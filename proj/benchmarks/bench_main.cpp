#include <benchmark/benchmark.h>

#include "ramsey/family.hpp"
#include "ramsey/search.hpp"
#include "ramsey/solver.hpp"

using namespace ramsey;

namespace {

void PadicValuation(benchmark::State& state) {
    Int p(2);
    Rational x(Int(3 * 1024), Int(7));
    for (auto _ : state) {
        auto v = padic_val(p, x);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(PadicValuation);

void ParseNormalize(benchmark::State& state) {
    for (auto _ : state) {
        Equation eq = parse_equation("4*X_1_1*X_1_2 + 16*X_2_1*X_2_2 - X_3*X_4");
        benchmark::DoNotOptimize(eq);
    }
}
BENCHMARK(ParseNormalize);

void VerifyGolowich(benchmark::State& state) {
    long n = state.range(0);
    Equation eq = instantiate_equation({Family::Golowich, {{"n", Rational(n)}}});
    Coloring coloring = Coloring::padic(Int(2), static_cast<int>(n), 500);
    for (auto _ : state) {
        auto out = verify_avoids(Target(eq), coloring, 500);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(VerifyGolowich)->Arg(4)->Arg(6)->Arg(8);

void VerifyMn(benchmark::State& state) {
    long n = state.range(0);
    Equation eq = instantiate_equation(
        {Family::MN, {{"p", Rational(2)}, {"m", Rational(2)}, {"n", Rational(n)}}});
    Coloring coloring = Coloring::padic(Int(2), static_cast<int>(n), 500);
    for (auto _ : state) {
        auto out = verify_avoids(Target(eq), coloring, 500);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(VerifyMn)->Arg(3)->Arg(5)->Arg(7);

void SchurForcing(benchmark::State& state) {
    Target schur(parse_equation("x + y - z"));
    int colors = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto r = least_forcing_N(schur, colors, 20);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(SchurForcing)->Arg(2)->Arg(3);

void Waerden33Direct(benchmark::State& state) {
    Target ap3(instantiate_pattern({Family::VdwAp, {{"l", Rational(3)}}}));
    for (auto _ : state) {
        auto r = find_bad_coloring(ap3, 3, 27);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(Waerden33Direct);

void Waerden33Cnf(benchmark::State& state) {
    Target ap3(instantiate_pattern({Family::VdwAp, {{"l", Rational(3)}}}));
    CnfInstance cnf = export_cnf(ap3, 3, 27);
    for (auto _ : state) {
        auto r = solve_cnf(cnf.num_vars, cnf.clauses);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(Waerden33Cnf);

void PythagoreanExport(benchmark::State& state) {
    Target pyth(instantiate_equation({Family::Pyth, {}}));
    long n = state.range(0);
    for (auto _ : state) {
        CnfInstance cnf = export_cnf(pyth, 2, n);
        benchmark::DoNotOptimize(cnf);
    }
    state.SetComplexityN(n);
}
BENCHMARK(PythagoreanExport)->Arg(500)->Arg(1000)->Arg(2000)->Complexity();

} // namespace

BENCHMARK_MAIN();
