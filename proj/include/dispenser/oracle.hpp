/************************************************************************[oracle.hpp]
Copyright (c) 2026, The dispenser authors

Permission is hereby granted, free of charge, to any person obtaining a copy of this
software and associated documentation files (the "Software"), to deal in the Software
without restriction, including without limitation the rights to use, copy, modify,
merge, publish, distribute, sublicense, and/or sell copies of the Software, and to
permit persons to whom the Software is furnished to do so, subject to the following
conditions:

The above copyright notice and this permission notice shall be included in all copies
or substantial portions of the Software.

THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR IMPLIED,
INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY, FITNESS FOR A
PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION OF
CONTRACT, TORT OR OTHERWISE, ARISING FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE
OR THE USE OR OTHER DEALINGS IN THE SOFTWARE.
*************************************************************************************/

#pragma once

#include <optional>
#include <vector>

#include "dispenser/cnf.hpp"

// Exhaustive reference semantics. Everything here enumerates all 2^n assignments;
// clarity over speed, by construction the ground truth for the real engines.
namespace dispenser::oracle {

inline constexpr int kDefaultVarLimit = 24;

/// Duplicate-free, lexicographically sorted (v_1 most significant, 0 before 1).
using ModelSet = std::vector<Assignment>;

bool contains(const ModelSet& s, const Assignment& a);

/// All satisfying assignments of f, in lexicographic order.
ModelSet all_models(const CnfFormula& f, int var_limit = kDefaultVarLimit);

/// Models with no other model pointwise below them. The canonical "minimal model"
/// notion of this project.
ModelSet subset_minimal_models(const CnfFormula& f, int var_limit = kDefaultVarLimit);

/// Models where flipping any single 1 to 0 breaks modelhood. Strictly weaker than
/// subset-minimality (v1 <-> v2 separates the two); kept as a diagnostic.
ModelSet flip_minimal_models(const CnfFormula& f, int var_limit = kDefaultVarLimit);

/// Smallest superset of s closed under raising any variable from 0 to 1.
ModelSet upward_closure(const ModelSet& s, int num_vars);

struct DispensableSet {
    SatStatus        status = SatStatus::Unsat;
    std::vector<Var> variables; // sorted by index
};

/// Variables valued 0 in every subset-minimal model. An unsatisfiable formula
/// yields all variables (vacuous truth) with status Unsat.
DispensableSet dispensable_oracle(const CnfFormula& f, int var_limit = kDefaultVarLimit);

/// Minimum number of 1-valued variables over all models; nullopt when unsatisfiable.
std::optional<int> min_ones_count(const CnfFormula& f, int var_limit = kDefaultVarLimit);

} // namespace dispenser::oracle
