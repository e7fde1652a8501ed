#pragma once

#include "json.hpp"

#include "ramsey/certify.hpp"
#include "ramsey/cnf.hpp"
#include "ramsey/verify.hpp"
#include "ramsey/witness.hpp"

namespace ramsey {

// Documented schemas (stable for --json output and archival):
//   Equation:   {"terms": [{"coeff": "a/b", "exps": {"x": 2}}, ...]}
//   Pattern:    {"free_vars": [...], "terms": [Equation.terms...],
//                "constraints": [{"kind": ...}, ...]}
//   Certificate: {"p", "modulus", "outcome", "residue_table", "collision"?}
//   Witness:    {"equation", "assignment", "residual", "valid", "integral"}

nlohmann::json equation_to_json(const Equation& eq);
Equation equation_from_json(const nlohmann::json& j);

nlohmann::json pattern_to_json(const PatternSpec& spec);
PatternSpec pattern_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const ObstructionReport& report);

nlohmann::json witness_to_json(const WitnessReport& report);

nlohmann::json counterexample_to_json(const Counterexample& cex);

nlohmann::json coloring_to_json(const Coloring& coloring);

// DIMACS sidecar: (integer, color) -> propositional variable.
nlohmann::json varmap_to_json(const CnfInstance& cnf);

} // namespace ramsey
