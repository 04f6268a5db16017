/************************************************************************[maxsat.hpp]
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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dispenser/cnf.hpp"

namespace dispenser::maxsat {

struct SoftClause {
    Clause        clause;
    std::uint64_t weight = 1; // >= 1

    friend bool operator==(const SoftClause&, const SoftClause&) = default;
};

/// Hard clauses must be satisfied; soft clauses are optimized by total weight.
struct WeightedInstance {
    int                     num_vars = 0;
    std::vector<Clause>     hard;
    std::vector<SoftClause> soft;

    /// Throws WeightOverflow when the sum is not representable in 64 bits.
    std::uint64_t soft_weight_sum() const;

    friend bool operator==(const WeightedInstance&, const WeightedInstance&) = default;
};

enum class SolveStatus { Optimal, HardUnsat };

struct MaxSatResult {
    SolveStatus               status = SolveStatus::HardUnsat;
    std::optional<Assignment> model;         // set when Optimal
    std::uint64_t             cost = 0;      // total weight of falsified soft clauses
    std::uint64_t             decisions = 0; // branchings taken by the search
};

/// Exact weighted MaxSAT by depth-first branch and bound: branch on the
/// lowest-index unassigned variable, value 0 first, unit propagation on hard
/// clauses, prune when the falsified-soft weight reaches the incumbent cost.
/// Deterministic: identical inputs produce identical models.
MaxSatResult solve(const WeightedInstance& inst);

/// Minimize the number of 1-valued variables: original clauses become hard,
/// plus one soft unit clause ~v_i of weight 1 per variable.
WeightedInstance encode_min_ones(const CnfFormula& f);

/// Same objective rendered purely with weights: original clauses are soft with
/// weight n+1, which exceeds the total unit weight n, so any optimum satisfies
/// them whenever that is possible.
WeightedInstance encode_min_ones_weighted(const CnfFormula& f);

/// A model of f with as few 1-valued variables as possible; such a model is
/// always subset-minimal. nullopt when f is unsatisfiable.
std::optional<Assignment> cardinality_minimum_model(const CnfFormula& f);

/// Classic WDIMACS: `p wcnf <n> <m> <top>` with top = 1 + total soft weight;
/// hard clauses carry weight top.
std::string export_wcnf(const WeightedInstance& inst);

/// Inverse of export_wcnf; clauses carrying weight top come back as hard.
WeightedInstance parse_wcnf(std::string_view text);

} // namespace dispenser::maxsat
