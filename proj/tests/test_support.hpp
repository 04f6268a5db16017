/******************************************************************[test_support.hpp]
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

#include <algorithm>
#include <initializer_list>
#include <random>
#include <string_view>
#include <vector>

#include "dispenser/bdd.hpp"
#include "dispenser/cnf.hpp"
#include "dispenser/oracle.hpp"

namespace test_support {

inline dispenser::Assignment asg(std::string_view bits) {
    return dispenser::Assignment::from_bits(bits);
}

inline dispenser::oracle::ModelSet mset(std::initializer_list<std::string_view> bit_strings) {
    dispenser::oracle::ModelSet out;
    for (std::string_view s : bit_strings) out.push_back(asg(s));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<dispenser::Var> vars(std::initializer_list<int> indices) {
    std::vector<dispenser::Var> out;
    for (int i : indices) out.push_back(dispenser::Var{i});
    return out;
}

// Random CNF over 1..max_vars variables, up to max_clauses clauses of length
// 1..3 (with a rare empty clause to cover the unsatisfiable path).
inline dispenser::CnfFormula random_cnf(std::mt19937& rng, int max_vars, int max_clauses) {
    std::uniform_int_distribution<int> nv(1, max_vars);
    const int n = nv(rng);
    std::uniform_int_distribution<int> mc(0, max_clauses);
    const int m = mc(rng);
    dispenser::CnfFormula f;
    f.num_vars = n;
    std::uniform_int_distribution<int> len_d(1, 3), var_d(1, n), coin(0, 1), pct(0, 99);
    for (int i = 0; i < m; ++i) {
        if (pct(rng) < 2) {
            f.clauses.push_back(dispenser::Clause{});
            continue;
        }
        std::vector<dispenser::Lit> lits;
        const int len = len_d(rng);
        for (int j = 0; j < len; ++j) {
            const int v = var_d(rng);
            lits.push_back(dispenser::Lit(coin(rng) ? v : -v));
        }
        f.clauses.push_back(dispenser::Clause(std::move(lits)));
    }
    return f;
}

// Model set of a BDD read purely through evaluation, independent of the
// structural operators under test.
inline dispenser::oracle::ModelSet bdd_models(const dispenser::bdd::BddManager& m, dispenser::bdd::NodeRef f) {
    dispenser::oracle::ModelSet out;
    const int n = m.num_vars();
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t x = 0; x < total; ++x) {
        dispenser::Assignment a = dispenser::Assignment::from_index(n, x);
        if (m.evaluate(f, a)) out.push_back(a);
    }
    return out;
}

// BDD of an explicit truth table: bit i of `table` is the function value at
// assignment index i (v_1 most significant). Needs n <= 6.
inline dispenser::bdd::NodeRef from_table(dispenser::bdd::BddManager& m, std::uint64_t table, int level = 0) {
    const int n = m.num_vars();
    if (level == n) return (table & 1u) ? m.one() : m.zero();
    const int half = 1 << (n - level - 1);
    dispenser::bdd::NodeRef low = from_table(m, table & ((std::uint64_t{1} << half) - 1), level + 1);
    dispenser::bdd::NodeRef high = from_table(m, table >> half, level + 1);
    if (low == high) return low;
    return m.mk_node(level, low, high);
}

} // namespace test_support
