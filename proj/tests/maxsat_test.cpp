/***********************************************************************[maxsat_test.cpp]
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <random>

#include "dispenser/maxsat.hpp"
#include "dispenser/oracle.hpp"
#include "test_support.hpp"

using namespace dispenser;
using namespace dispenser::maxsat;
using test_support::asg;
using test_support::random_cnf;

namespace {

const CnfFormula kOrAB{2, {Clause{1, 2}}};
const CnfFormula kUnsat{1, {Clause{1}, Clause{-1}}};

// Exhaustive reference: minimum falsified-soft weight over assignments
// satisfying the hard clauses, or nothing when none does.
std::optional<std::uint64_t> brute_force_cost(const WeightedInstance& inst) {
    std::optional<std::uint64_t> best;
    const std::uint64_t total = std::uint64_t{1} << inst.num_vars;
    for (std::uint64_t x = 0; x < total; ++x) {
        Assignment a = Assignment::from_index(inst.num_vars, x);
        bool hard_ok = true;
        for (const Clause& c : inst.hard) hard_ok = hard_ok && satisfies(c, a);
        if (!hard_ok) continue;
        std::uint64_t cost = 0;
        for (const SoftClause& sc : inst.soft)
            if (!satisfies(sc.clause, a)) cost += sc.weight;
        if (!best || cost < *best) best = cost;
    }
    return best;
}

WeightedInstance random_instance(std::mt19937& rng) {
    CnfFormula f = random_cnf(rng, 7, 8);
    WeightedInstance inst;
    inst.num_vars = f.num_vars;
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<std::uint64_t> weight(1, 5);
    for (const Clause& c : f.clauses) {
        if (coin(rng)) inst.hard.push_back(c);
        else inst.soft.push_back({c, weight(rng)});
    }
    return inst;
}

} // namespace

TEST_CASE("solve finds the optimum on the worked example") {
    // hard (v1 | v2), soft ~v1 and ~v2 of weight 1: the best cost is 1
    WeightedInstance inst = encode_min_ones(kOrAB);
    MaxSatResult r = solve(inst);
    REQUIRE(r.status == SolveStatus::Optimal);
    CHECK(r.cost == 1);
    REQUIRE(r.model.has_value());
    // deterministic tie-break: lowest variable first, 0 before 1
    CHECK(*r.model == asg("01"));
}

TEST_CASE("solve reports HardUnsat") {
    WeightedInstance inst = encode_min_ones(kUnsat);
    CHECK(solve(inst).status == SolveStatus::HardUnsat);
}

TEST_CASE("solve with no soft clauses has cost 0") {
    WeightedInstance inst;
    inst.num_vars = 2;
    inst.hard = {Clause{1, 2}};
    MaxSatResult r = solve(inst);
    REQUIRE(r.status == SolveStatus::Optimal);
    CHECK(r.cost == 0);
}

TEST_CASE("solve rejects zero-weight soft clauses") {
    WeightedInstance inst;
    inst.num_vars = 1;
    inst.soft = {{Clause{1}, 0}};
    CHECK_THROWS_AS(solve(inst), Error);
}

TEST_CASE("encode_min_ones structure") {
    WeightedInstance w = encode_min_ones(kOrAB);
    CHECK(w.num_vars == 2);
    REQUIRE(w.hard.size() == 1);
    CHECK(w.hard[0] == Clause{1, 2});
    REQUIRE(w.soft.size() == 2);
    CHECK(w.soft[0] == SoftClause{Clause{-1}, 1});
    CHECK(w.soft[1] == SoftClause{Clause{-2}, 1});

    WeightedInstance empty = encode_min_ones(CnfFormula{2, {}});
    CHECK(empty.hard.empty());
    CHECK(empty.soft.size() == 2);

    WeightedInstance x1 = encode_min_ones(xor_chain(1));
    CHECK(x1.hard.size() == 2);
    CHECK(x1.soft.size() == 2);
}

TEST_CASE("pure-weighted rendering gives the original clauses weight n+1") {
    WeightedInstance w = encode_min_ones_weighted(kOrAB);
    CHECK(w.hard.empty());
    REQUIRE(w.soft.size() == 3);
    CHECK(w.soft[0] == SoftClause{Clause{1, 2}, 3});
    CHECK(w.soft[1].weight == 1);
    CHECK(w.soft[2].weight == 1);
}

TEST_CASE("cardinality_minimum_model") {
    std::optional<Assignment> m = cardinality_minimum_model(kOrAB);
    REQUIRE(m.has_value());
    CHECK(*m == asg("01"));

    std::optional<Assignment> zeros = cardinality_minimum_model(CnfFormula{3, {}});
    REQUIRE(zeros.has_value());
    CHECK(*zeros == asg("000"));

    CHECK_FALSE(cardinality_minimum_model(kUnsat).has_value());
}

TEST_CASE("a minimal model need not be cardinality-minimum") {
    // (v1 | v2) & (~v1 | v3): minimal models are 010 and 101
    CnfFormula f{3, {Clause{1, 2}, Clause{-1, 3}}};
    oracle::ModelSet minimal = oracle::subset_minimal_models(f);
    CHECK(minimal == test_support::mset({"010", "101"}));
    CHECK(oracle::min_ones_count(f) == 1);
    bool some_larger = false;
    for (const Assignment& mu : minimal) some_larger = some_larger || mu.ones() > 1;
    CHECK(some_larger);
}

TEST_CASE("export_wcnf golden output") {
    CHECK(export_wcnf(encode_min_ones(kOrAB)) == "p wcnf 2 3 3\n3 1 2 0\n1 -1 0\n1 -2 0\n");
    CHECK(export_wcnf(WeightedInstance{}) == "p wcnf 0 0 1\n");
    WeightedInstance one_hard;
    one_hard.num_vars = 1;
    one_hard.hard = {Clause{1}};
    CHECK(export_wcnf(one_hard) == "p wcnf 1 1 1\n1 1 0\n");
}

TEST_CASE("export_wcnf round-trips through parse_wcnf") {
    std::mt19937 rng(3);
    for (int i = 0; i < 100; ++i) {
        WeightedInstance inst = random_instance(rng);
        WeightedInstance back = parse_wcnf(export_wcnf(inst));
        CHECK(back == inst);
    }
}

TEST_CASE("parse_wcnf error cases") {
    CHECK_THROWS_AS(parse_wcnf("p cnf 1 1\n1 1 0\n"), MalformedHeader);
    CHECK_THROWS_AS(parse_wcnf("p wcnf 1 1 3\n3 2 0\n"), LiteralOutOfRange);
    CHECK_THROWS_AS(parse_wcnf("p wcnf 1 1 3\n3 1\n"), UnterminatedClause);
    CHECK_THROWS_AS(parse_wcnf("p wcnf 1 2 3\n3 1 0\n"), ClauseCountMismatch);
    CHECK_THROWS_AS(parse_wcnf("p wcnf 1 1 3\n0 1 0\n"), DimacsError);
}

TEST_CASE("solve matches the exhaustive optimum on random instances") {
    std::mt19937 rng(17);
    for (int i = 0; i < 200; ++i) {
        WeightedInstance inst = random_instance(rng);
        MaxSatResult r = solve(inst);
        std::optional<std::uint64_t> expected = brute_force_cost(inst);
        if (!expected) {
            CHECK(r.status == SolveStatus::HardUnsat);
            continue;
        }
        REQUIRE(r.status == SolveStatus::Optimal);
        CHECK(r.cost == *expected);
        REQUIRE(r.model.has_value());
        for (const Clause& c : inst.hard) CHECK(satisfies(c, *r.model));
        std::uint64_t model_cost = 0;
        for (const SoftClause& sc : inst.soft)
            if (!satisfies(sc.clause, *r.model)) model_cost += sc.weight;
        CHECK(model_cost == r.cost);
    }
}

TEST_CASE("solve is deterministic") {
    std::mt19937 rng(19);
    for (int i = 0; i < 50; ++i) {
        WeightedInstance inst = random_instance(rng);
        MaxSatResult a = solve(inst);
        MaxSatResult b = solve(inst);
        CHECK(a.status == b.status);
        CHECK(a.cost == b.cost);
        CHECK(a.model == b.model);
    }
}

TEST_CASE("cardinality-minimum models are subset-minimal with the right 1-count") {
    std::mt19937 rng(13);
    for (int i = 0; i < 200; ++i) {
        CnfFormula f = random_cnf(rng, 8, 12);
        std::optional<Assignment> m = cardinality_minimum_model(f);
        std::optional<int> best = oracle::min_ones_count(f);
        if (!best) {
            CHECK_FALSE(m.has_value());
            continue;
        }
        REQUIRE(m.has_value());
        CHECK(m->ones() == *best);
        CHECK(oracle::contains(oracle::subset_minimal_models(f), *m));
    }
}

TEST_CASE("pure-weighted optimum satisfies every original clause when possible") {
    std::mt19937 rng(43);
    int satisfiable_seen = 0;
    for (int i = 0; i < 150; ++i) {
        CnfFormula f = random_cnf(rng, 7, 10);
        if (oracle::all_models(f).empty()) continue;
        ++satisfiable_seen;
        MaxSatResult r = solve(encode_min_ones_weighted(f));
        REQUIRE(r.status == SolveStatus::Optimal); // no hard clauses at all
        REQUIRE(r.model.has_value());
        CHECK(evaluate(f, *r.model));
        // with the originals satisfied the cost is exactly the number of 1s
        CHECK(r.cost == static_cast<std::uint64_t>(*oracle::min_ones_count(f)));
    }
    CHECK(satisfiable_seen > 50);
}

TEST_CASE("weight overflow is reported") {
    WeightedInstance inst;
    inst.num_vars = 1;
    const std::uint64_t huge = std::numeric_limits<std::uint64_t>::max() - 1;
    inst.soft = {{Clause{-1}, huge}, {Clause{1}, 3}};
    CHECK_THROWS_AS(inst.soft_weight_sum(), WeightOverflow);
    CHECK_THROWS_AS(solve(inst), WeightOverflow);
    CHECK_THROWS_AS(export_wcnf(inst), WeightOverflow);

    WeightedInstance top_edge;
    top_edge.num_vars = 1;
    top_edge.soft = {{Clause{-1}, std::numeric_limits<std::uint64_t>::max()}};
    CHECK_THROWS_AS(export_wcnf(top_edge), WeightOverflow); // top = sum + 1 overflows
}
