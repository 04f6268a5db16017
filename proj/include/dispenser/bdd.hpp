/***************************************************************************[bdd.hpp]
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
#include <iosfwd>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dispenser/cnf.hpp"

namespace dispenser::bdd {

/// Handle into one manager's node store. Canonical: structurally identical
/// reduced subgraphs share one handle. Ids 0 and 1 are the terminals.
struct NodeRef {
    std::uint32_t id = 0;
    std::uint32_t mgr = 0;

    friend bool operator==(const NodeRef&, const NodeRef&) = default;
};

enum class Op : std::uint8_t { And = 0, Or = 1, Xor = 2 };

/// Reduced ordered BDD store with hash-consing and memoized operators.
///
/// Levels run 0..n-1 from the root; by default level i holds v_{i+1}, an
/// explicit variable order permutes that. A manager is single-owner: callers
/// serialize operations on one manager; distinct managers are independent.
class BddManager {
public:
    explicit BddManager(int num_vars);
    /// var_order[level] = 1-based variable index placed at that level;
    /// must be a permutation of 1..n.
    BddManager(int num_vars, const std::vector<int>& var_order);

    BddManager(BddManager&&) = default;
    BddManager& operator=(BddManager&&) = default;
    BddManager(const BddManager&) = delete;
    BddManager& operator=(const BddManager&) = delete;

    NodeRef zero() const { return {0, id_}; }
    NodeRef one() const { return {1, id_}; }
    int     num_vars() const { return n_; }

    int level_of(Var v) const;
    Var var_at(int level) const;

    bool    is_terminal(NodeRef f) const;
    int     node_level(NodeRef f) const;
    NodeRef low(NodeRef f) const;
    NodeRef high(NodeRef f) const;

    /// Canonical node constructor: collapses low == high, hash-conses the rest.
    NodeRef mk_node(int level, NodeRef low, NodeRef high);

    NodeRef var_ref(Var v);
    NodeRef literal_ref(Lit l);

    /// Pointwise combination, memoized; cost O(|f|*|g|).
    NodeRef apply(Op op, NodeRef f, NodeRef g);

    NodeRef negate(NodeRef f);

    /// Disjunction of the clause's literals; at most |c| internal nodes.
    /// The empty clause yields ZERO; a tautological clause yields ONE.
    NodeRef from_clause(const Clause& c);

    /// Conjunction of all clause BDDs, combined smallest-two-first from a
    /// priority queue (ties broken by insertion order). Zero clauses yield ONE.
    NodeRef compile_cnf(const CnfFormula& f);

    /// Count of distinct nodes reachable from f, terminals included.
    std::size_t size(NodeRef f) const;

    bool evaluate(NodeRef f, const Assignment& a) const;

    /// Lexicographically smallest model under the manager's variable order:
    /// from the root take the low branch unless it is ZERO; variables skipped
    /// along the path are 0. Always subset-minimal. nullopt for ZERO.
    std::optional<Assignment> lex_min_model(NodeRef f) const;

    /// Upward closure: models of f plus everything reachable by flipping 0s
    /// to 1s. Never larger than f as a BDD.
    NodeRef monotone(NodeRef f);

    /// BDD of exactly the subset-minimal models of f over all n variables.
    /// A variable untested on a path must be 0 in a minimal model, so in any
    /// non-ZERO result every root-to-ONE path tests all n variables.
    NodeRef minimal(NodeRef f);

    /// Variables taking value 1 in some model, read structurally: a node
    /// contributes its variable unless its high branch is ZERO. Applied to
    /// minimal(g) this is exactly "1 in some minimal model of g".
    std::vector<Var> extract(NodeRef f) const;

    /// Diagnostic dump, one `node <id> <level> <lowId> <highId>` line per
    /// reachable internal node. Not a stability-guaranteed format.
    void dump(NodeRef f, std::ostream& out) const;

    std::size_t node_count() const { return nodes_.size(); }

    struct NodeData {
        int           level;
        std::uint32_t low, high;
    };
    /// Raw store access for invariant checks in tests.
    NodeData node_at(std::uint32_t id) const;

private:
    struct NodeKey {
        int           level;
        std::uint32_t low, high;
        friend bool operator==(const NodeKey&, const NodeKey&) = default;
    };
    struct NodeKeyHash {
        std::size_t operator()(const NodeKey& k) const;
    };
    struct ApplyKey {
        std::uint8_t  op;
        std::uint32_t a, b;
        friend bool operator==(const ApplyKey&, const ApplyKey&) = default;
    };
    struct ApplyKeyHash {
        std::size_t operator()(const ApplyKey& k) const;
    };

    void          check(NodeRef f) const;
    NodeRef       wrap(std::uint32_t id) const { return {id, id_}; }
    std::uint32_t mk(int level, std::uint32_t low, std::uint32_t high);
    std::uint32_t apply_rec(std::uint8_t op, std::uint32_t f, std::uint32_t g);
    std::uint32_t negate_rec(std::uint32_t f);
    std::uint32_t monotone_rec(std::uint32_t f);
    std::uint32_t minimal_rec(std::uint32_t f, int k);
    std::size_t   size_of_id(std::uint32_t f) const;

    int              n_;
    std::uint32_t    id_;
    std::vector<int> level_of_; // by 1-based variable index
    std::vector<int> var_at_;   // by level

    std::vector<NodeData>                                          nodes_;
    std::unordered_map<NodeKey, std::uint32_t, NodeKeyHash>        unique_;
    std::unordered_map<ApplyKey, std::uint32_t, ApplyKeyHash>      apply_memo_;
    std::unordered_map<std::uint32_t, std::uint32_t>               negate_memo_;
    std::unordered_map<std::uint32_t, std::uint32_t>               monotone_memo_;
    std::unordered_map<std::uint64_t, std::uint32_t>               minimal_memo_; // (id, level)
};

struct BddDispensable {
    SatStatus        status = SatStatus::Unsat;
    std::vector<Var> variables;        // sorted by index
    std::size_t      formula_bdd_size = 0;
    std::size_t      minimal_bdd_size = 0;
};

/// Direct construction: complement of extract(minimal(compile_cnf(f))).
/// An unsatisfiable formula yields all variables with status Unsat.
BddDispensable dispensable_via_bdd(BddManager& m, const CnfFormula& f);

} // namespace dispenser::bdd
