/************************************************************************[oracle.cpp]
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

#include "dispenser/oracle.hpp"

#include <algorithm>
#include <set>

namespace dispenser::oracle {

namespace {

void check_guard(int num_vars, int var_limit) {
    if (num_vars > var_limit)
        throw TooManyVariables("formula has " + std::to_string(num_vars) +
                               " variables, exhaustive guard limit is " + std::to_string(var_limit));
}

} // namespace

bool contains(const ModelSet& s, const Assignment& a) {
    return std::binary_search(s.begin(), s.end(), a);
}

ModelSet all_models(const CnfFormula& f, int var_limit) {
    check_guard(f.num_vars, var_limit);
    ModelSet out;
    const std::uint64_t total = std::uint64_t{1} << f.num_vars;
    for (std::uint64_t x = 0; x < total; ++x) {
        Assignment a = Assignment::from_index(f.num_vars, x);
        if (evaluate(f, a)) out.push_back(a);
    }
    return out; // lexicographic by construction
}

ModelSet subset_minimal_models(const CnfFormula& f, int var_limit) {
    ModelSet models = all_models(f, var_limit);
    ModelSet out;
    for (const Assignment& mu : models) {
        bool minimal = true;
        for (const Assignment& nu : models) {
            if (nu == mu) continue;
            if (nu.leq(mu)) { minimal = false; break; }
        }
        if (minimal) out.push_back(mu);
    }
    return out;
}

ModelSet flip_minimal_models(const CnfFormula& f, int var_limit) {
    ModelSet models = all_models(f, var_limit);
    ModelSet out;
    for (const Assignment& mu : models) {
        bool minimal = true;
        for (int v = 1; v <= f.num_vars && minimal; ++v) {
            if (!mu.value(Var{v})) continue;
            Assignment flipped = mu;
            flipped.set(Var{v}, false);
            if (evaluate(f, flipped)) minimal = false;
        }
        if (minimal) out.push_back(mu);
    }
    return out;
}

ModelSet upward_closure(const ModelSet& s, int num_vars) {
    std::set<Assignment> closed(s.begin(), s.end());
    std::vector<Assignment> work(s.begin(), s.end());
    while (!work.empty()) {
        Assignment a = work.back();
        work.pop_back();
        for (int v = 1; v <= num_vars; ++v) {
            if (a.value(Var{v})) continue;
            Assignment raised = a;
            raised.set(Var{v}, true);
            if (closed.insert(raised).second) work.push_back(raised);
        }
    }
    return ModelSet(closed.begin(), closed.end());
}

DispensableSet dispensable_oracle(const CnfFormula& f, int var_limit) {
    ModelSet minimal = subset_minimal_models(f, var_limit);
    DispensableSet out;
    if (minimal.empty()) {
        out.status = SatStatus::Unsat;
        for (int v = 1; v <= f.num_vars; ++v) out.variables.push_back(Var{v});
        return out;
    }
    out.status = SatStatus::Sat;
    for (int v = 1; v <= f.num_vars; ++v) {
        bool ever_one = false;
        for (const Assignment& mu : minimal)
            if (mu.value(Var{v})) { ever_one = true; break; }
        if (!ever_one) out.variables.push_back(Var{v});
    }
    return out;
}

std::optional<int> min_ones_count(const CnfFormula& f, int var_limit) {
    ModelSet models = all_models(f, var_limit);
    if (models.empty()) return std::nullopt;
    int best = f.num_vars + 1;
    for (const Assignment& mu : models) best = std::min(best, mu.ones());
    return best;
}

} // namespace dispenser::oracle
