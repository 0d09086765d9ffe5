#pragma once

#include <json.hpp>

#include "polycat/solver.hpp"
#include "polycat/truncseries.hpp"

namespace polycat {

// {"p": "...", "n": N, "coeffs": ["c0", "c1", ...]} — big integers
// always travel as decimal strings.
nlohmann::json toJson(const TruncSeries& s);

// The frozen report schema:
// {"p","n","a","form","roots":[{"coeffs":[...]},{"coeffs":[...]}],
//  "verified","oracles":{"fixed_point","hensel","brute_force"},
//  "numeric":{"modulus","x1","x2"}|null}
// where each oracle entry is a bool or the string "skipped".
nlohmann::json toJson(const SolveReport& report, const QuadraticProblem& prob,
                      bool includeNumeric);

// Accepts a JSON array whose entries are integers or decimal strings
// (signed allowed); used for coefficient lists and term lists.
std::vector<BigInt> bigIntsFromJson(const nlohmann::json& array);

} // namespace polycat
