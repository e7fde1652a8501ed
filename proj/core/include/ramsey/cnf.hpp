#pragma once

#include <cstdint>
#include <iosfwd>

#include "ramsey/coloring.hpp"
#include "ramsey/enumerate.hpp"

namespace ramsey {

// Propositional encoding of "some r-coloring of [1, N] avoids the target".
// r = 2: one variable per integer (true = color 1), two clauses per instance
// (not all color 0, not all color 1). r > 2: one-hot variables x_{i,c} with
// at-least-one and pairwise at-most-one clauses per integer plus one blocking
// clause per instance per color. Satisfying assignments correspond
// bijectively to bad colorings through the variable map.
struct CnfInstance {
    long n = 0;
    int colors = 2;
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;

    int var_of(long value, int color) const;
    // (value, color) encoded by a DIMACS variable
    std::pair<long, int> value_color_of(int var) const;
};

CnfInstance export_cnf(const Target& target, int colors, long n,
                       const EnumerationPolicy& policy = {});

void write_dimacs(const CnfInstance& cnf, std::ostream& out, const std::string& comment = "");

// Generic DIMACS reader for externally produced files. FormatError on
// malformed input.
struct Cnf {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
};
Cnf parse_dimacs(std::istream& in);

// Solver model in DIMACS v-line format ("v 1 -2 ... 0"); bare integer lines
// are accepted too. Index 1..num_vars; unmentioned variables default false.
std::vector<std::int8_t> parse_model(std::istream& in, int num_vars);

// Model -> explicit coloring; checks the model satisfies every clause
// (NotSatisfying) and that one-hot blocks are coherent (IncoherentOneHot).
Coloring decode_coloring(const CnfInstance& cnf, const std::vector<std::int8_t>& model);

} // namespace ramsey
