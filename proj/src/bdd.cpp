/***************************************************************************[bdd.cpp]
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

#include "dispenser/bdd.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <map>
#include <ostream>
#include <queue>
#include <unordered_set>

namespace dispenser::bdd {

namespace {

std::atomic<std::uint32_t> next_manager_id{1};

inline void hash_combine(std::size_t& seed, std::size_t v) {
    seed ^= v + 0x9e3779b9 + (seed << 6) + (seed >> 2);
}

constexpr std::uint32_t kZero = 0;
constexpr std::uint32_t kOne = 1;

} // namespace

std::size_t BddManager::NodeKeyHash::operator()(const NodeKey& k) const {
    std::size_t seed = static_cast<std::size_t>(k.level);
    hash_combine(seed, k.low);
    hash_combine(seed, k.high);
    return seed;
}

std::size_t BddManager::ApplyKeyHash::operator()(const ApplyKey& k) const {
    std::size_t seed = static_cast<std::size_t>(k.op);
    hash_combine(seed, k.a);
    hash_combine(seed, k.b);
    return seed;
}

BddManager::BddManager(int num_vars) : n_(num_vars), id_(next_manager_id.fetch_add(1)) {
    if (num_vars < 0) throw Error("BddManager requires a non-negative variable count");
    level_of_.resize(static_cast<std::size_t>(n_) + 1, -1);
    var_at_.resize(static_cast<std::size_t>(n_), 0);
    for (int v = 1; v <= n_; ++v) {
        level_of_[static_cast<std::size_t>(v)] = v - 1;
        var_at_[static_cast<std::size_t>(v - 1)] = v;
    }
    // terminals live below every level
    nodes_.push_back({n_, kZero, kZero});
    nodes_.push_back({n_, kOne, kOne});
}

BddManager::BddManager(int num_vars, const std::vector<int>& var_order) : BddManager(num_vars) {
    if (static_cast<int>(var_order.size()) != n_)
        throw Error("variable order must name all " + std::to_string(n_) + " variables");
    std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
    for (int v : var_order) {
        if (v < 1 || v > n_ || seen[static_cast<std::size_t>(v)])
            throw Error("variable order must be a permutation of 1.." + std::to_string(n_));
        seen[static_cast<std::size_t>(v)] = true;
    }
    for (int lvl = 0; lvl < n_; ++lvl) {
        var_at_[static_cast<std::size_t>(lvl)] = var_order[static_cast<std::size_t>(lvl)];
        level_of_[static_cast<std::size_t>(var_order[static_cast<std::size_t>(lvl)])] = lvl;
    }
}

int BddManager::level_of(Var v) const {
    if (v.index < 1 || v.index > n_) throw LevelOutOfRange("variable v" + std::to_string(v.index) + " not managed");
    return level_of_[static_cast<std::size_t>(v.index)];
}

Var BddManager::var_at(int level) const {
    if (level < 0 || level >= n_) throw LevelOutOfRange("level " + std::to_string(level) + " out of range");
    return Var{var_at_[static_cast<std::size_t>(level)]};
}

void BddManager::check(NodeRef f) const {
    if (f.mgr != id_) throw ManagerMismatch("NodeRef belongs to a different manager");
    assert(f.id < nodes_.size());
}

bool BddManager::is_terminal(NodeRef f) const {
    check(f);
    return f.id < 2;
}

int BddManager::node_level(NodeRef f) const {
    check(f);
    return nodes_[f.id].level;
}

NodeRef BddManager::low(NodeRef f) const {
    check(f);
    assert(f.id >= 2);
    return wrap(nodes_[f.id].low);
}

NodeRef BddManager::high(NodeRef f) const {
    check(f);
    assert(f.id >= 2);
    return wrap(nodes_[f.id].high);
}

BddManager::NodeData BddManager::node_at(std::uint32_t id) const {
    assert(id < nodes_.size());
    return nodes_[id];
}

std::uint32_t BddManager::mk(int level, std::uint32_t low, std::uint32_t high) {
    assert(level >= 0 && level < n_);
    assert(nodes_[low].level > level && nodes_[high].level > level);
    if (low == high) return low;
    NodeKey key{level, low, high};
    auto it = unique_.find(key);
    if (it != unique_.end()) return it->second;
    nodes_.push_back({level, low, high});
    std::uint32_t id = static_cast<std::uint32_t>(nodes_.size() - 1);
    unique_.emplace(key, id);
    return id;
}

NodeRef BddManager::mk_node(int level, NodeRef low, NodeRef high) {
    check(low);
    check(high);
    if (level < 0 || level >= n_) throw LevelOutOfRange("node level " + std::to_string(level) + " out of range");
    return wrap(mk(level, low.id, high.id));
}

NodeRef BddManager::var_ref(Var v) {
    return wrap(mk(level_of(v), kZero, kOne));
}

NodeRef BddManager::literal_ref(Lit l) {
    int lvl = level_of(l.var());
    return l.is_positive() ? wrap(mk(lvl, kZero, kOne)) : wrap(mk(lvl, kOne, kZero));
}

std::uint32_t BddManager::apply_rec(std::uint8_t op, std::uint32_t f, std::uint32_t g) {
    switch (static_cast<Op>(op)) {
        case Op::And:
            if (f == kZero || g == kZero) return kZero;
            if (f == kOne) return g;
            if (g == kOne) return f;
            if (f == g) return f;
            break;
        case Op::Or:
            if (f == kOne || g == kOne) return kOne;
            if (f == kZero) return g;
            if (g == kZero) return f;
            if (f == g) return f;
            break;
        case Op::Xor:
            if (f == g) return kZero;
            if (f == kZero) return g;
            if (g == kZero) return f;
            break;
    }
    // all three ops are commutative; normalize the memo key
    ApplyKey key{op, std::min(f, g), std::max(f, g)};
    auto it = apply_memo_.find(key);
    if (it != apply_memo_.end()) return it->second;

    const NodeData fn = nodes_[f];
    const NodeData gn = nodes_[g];
    const int top = std::min(fn.level, gn.level);
    const std::uint32_t f0 = fn.level == top ? fn.low : f;
    const std::uint32_t f1 = fn.level == top ? fn.high : f;
    const std::uint32_t g0 = gn.level == top ? gn.low : g;
    const std::uint32_t g1 = gn.level == top ? gn.high : g;
    const std::uint32_t r0 = apply_rec(op, f0, g0);
    const std::uint32_t r1 = apply_rec(op, f1, g1);
    const std::uint32_t r = mk(top, r0, r1);
    apply_memo_.emplace(key, r);
    return r;
}

NodeRef BddManager::apply(Op op, NodeRef f, NodeRef g) {
    check(f);
    check(g);
    return wrap(apply_rec(static_cast<std::uint8_t>(op), f.id, g.id));
}

std::uint32_t BddManager::negate_rec(std::uint32_t f) {
    if (f == kZero) return kOne;
    if (f == kOne) return kZero;
    auto it = negate_memo_.find(f);
    if (it != negate_memo_.end()) return it->second;
    const NodeData fn = nodes_[f];
    const std::uint32_t r = mk(fn.level, negate_rec(fn.low), negate_rec(fn.high));
    negate_memo_.emplace(f, r);
    return r;
}

NodeRef BddManager::negate(NodeRef f) {
    check(f);
    return wrap(negate_rec(f.id));
}

NodeRef BddManager::from_clause(const Clause& c) {
    if (c.empty()) return zero();
    // polarity mask per level: bit 0 positive, bit 1 negative
    std::map<int, unsigned> by_level;
    for (Lit l : c) {
        if (l.var().index > n_)
            throw LiteralOutOfRange("clause literal " + std::to_string(l.dimacs()) + " not managed");
        by_level[level_of(l.var())] |= l.is_positive() ? 1u : 2u;
    }
    std::uint32_t r = kZero;
    for (auto it = by_level.rbegin(); it != by_level.rend(); ++it) {
        const auto [lvl, mask] = *it;
        if (mask == 3u) r = kOne; // v or ~v: true at this level regardless
        else if (mask == 1u) r = mk(lvl, r, kOne);
        else r = mk(lvl, kOne, r);
    }
    return wrap(r);
}

NodeRef BddManager::compile_cnf(const CnfFormula& f) {
    if (f.num_vars > n_)
        throw Error("formula declares more variables than the manager holds");
    if (f.clauses.empty()) return one();
    // (size, insertion sequence, node): conjoin the two smallest first
    using Item = std::tuple<std::size_t, std::uint64_t, std::uint32_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
    std::uint64_t seq = 0;
    for (const Clause& c : f.clauses) {
        std::uint32_t b = from_clause(c).id;
        queue.emplace(size_of_id(b), seq++, b);
    }
    while (queue.size() > 1) {
        const auto [sa, qa, a] = queue.top();
        queue.pop();
        const auto [sb, qb, b] = queue.top();
        queue.pop();
        const std::uint32_t r = apply_rec(static_cast<std::uint8_t>(Op::And), a, b);
        queue.emplace(size_of_id(r), seq++, r);
    }
    return wrap(std::get<2>(queue.top()));
}

std::size_t BddManager::size_of_id(std::uint32_t f) const {
    std::unordered_set<std::uint32_t> seen;
    std::vector<std::uint32_t> stack{f};
    while (!stack.empty()) {
        std::uint32_t u = stack.back();
        stack.pop_back();
        if (!seen.insert(u).second) continue;
        if (u < 2) continue;
        stack.push_back(nodes_[u].low);
        stack.push_back(nodes_[u].high);
    }
    return seen.size();
}

std::size_t BddManager::size(NodeRef f) const {
    check(f);
    return size_of_id(f.id);
}

bool BddManager::evaluate(NodeRef f, const Assignment& a) const {
    check(f);
    assert(a.num_vars() == n_);
    std::uint32_t cur = f.id;
    while (cur >= 2) {
        const NodeData& nd = nodes_[cur];
        cur = a.value(var_at(nd.level)) ? nd.high : nd.low;
    }
    return cur == kOne;
}

std::optional<Assignment> BddManager::lex_min_model(NodeRef f) const {
    check(f);
    if (f.id == kZero) return std::nullopt;
    Assignment a(n_); // skipped variables stay 0
    std::uint32_t cur = f.id;
    while (cur != kOne) {
        const NodeData& nd = nodes_[cur];
        if (nd.low != kZero) {
            cur = nd.low;
        } else {
            a.set(var_at(nd.level), true);
            cur = nd.high;
        }
    }
    return a;
}

std::uint32_t BddManager::monotone_rec(std::uint32_t f) {
    if (f < 2) return f;
    auto it = monotone_memo_.find(f);
    if (it != monotone_memo_.end()) return it->second;
    const NodeData fn = nodes_[f];
    const std::uint32_t ml = monotone_rec(fn.low);
    const std::uint32_t mh = monotone_rec(fn.high);
    // (v and monotone(h)) or monotone(l), cofactored at v
    const std::uint32_t r = mk(fn.level, ml, apply_rec(static_cast<std::uint8_t>(Op::Or), mh, ml));
    monotone_memo_.emplace(f, r);
    return r;
}

NodeRef BddManager::monotone(NodeRef f) {
    check(f);
    return wrap(monotone_rec(f.id));
}

std::uint32_t BddManager::minimal_rec(std::uint32_t f, int k) {
    if (f == kZero) return kZero;
    if (k == n_) {
        assert(f < 2);
        return f;
    }
    const std::uint64_t key = (static_cast<std::uint64_t>(f) << 32) | static_cast<std::uint32_t>(k);
    auto it = minimal_memo_.find(key);
    if (it != minimal_memo_.end()) return it->second;

    const NodeData fn = nodes_[f];
    std::uint32_t r;
    if (fn.level > k) {
        // f does not test the level-k variable: it must be 0 in a minimal model
        r = mk(k, minimal_rec(f, k + 1), kZero);
    } else {
        assert(fn.level == k);
        // a model with v = 1 is minimal only if no smaller assignment
        // satisfies the v = 0 branch
        const std::uint32_t lo = minimal_rec(fn.low, k + 1);
        const std::uint32_t hi = apply_rec(static_cast<std::uint8_t>(Op::And), minimal_rec(fn.high, k + 1),
                                           negate_rec(monotone_rec(fn.low)));
        r = mk(k, lo, hi);
    }
    minimal_memo_.emplace(key, r);
    return r;
}

NodeRef BddManager::minimal(NodeRef f) {
    check(f);
    return wrap(minimal_rec(f.id, 0));
}

std::vector<Var> BddManager::extract(NodeRef f) const {
    check(f);
    std::vector<bool> used(static_cast<std::size_t>(n_), false);
    std::unordered_set<std::uint32_t> seen;
    std::vector<std::uint32_t> stack{f.id};
    while (!stack.empty()) {
        std::uint32_t u = stack.back();
        stack.pop_back();
        if (u < 2 || !seen.insert(u).second) continue;
        const NodeData& nd = nodes_[u];
        if (nd.high != kZero) used[static_cast<std::size_t>(nd.level)] = true;
        stack.push_back(nd.low);
        stack.push_back(nd.high);
    }
    std::vector<Var> out;
    for (int lvl = 0; lvl < n_; ++lvl)
        if (used[static_cast<std::size_t>(lvl)]) out.push_back(var_at(lvl));
    std::sort(out.begin(), out.end());
    return out;
}

void BddManager::dump(NodeRef f, std::ostream& out) const {
    check(f);
    std::unordered_set<std::uint32_t> seen;
    std::vector<std::uint32_t> stack{f.id};
    std::vector<std::uint32_t> ids;
    while (!stack.empty()) {
        std::uint32_t u = stack.back();
        stack.pop_back();
        if (u < 2 || !seen.insert(u).second) continue;
        ids.push_back(u);
        stack.push_back(nodes_[u].low);
        stack.push_back(nodes_[u].high);
    }
    std::sort(ids.begin(), ids.end());
    for (std::uint32_t u : ids)
        out << "node " << u << ' ' << nodes_[u].level << ' ' << nodes_[u].low << ' ' << nodes_[u].high << '\n';
}

BddDispensable dispensable_via_bdd(BddManager& m, const CnfFormula& f) {
    NodeRef root = m.compile_cnf(f);
    BddDispensable out;
    out.formula_bdd_size = m.size(root);
    if (root == m.zero()) {
        out.status = SatStatus::Unsat;
        out.minimal_bdd_size = 1;
        for (int v = 1; v <= f.num_vars; ++v) out.variables.push_back(Var{v});
        return out;
    }
    NodeRef min = m.minimal(root);
    out.minimal_bdd_size = m.size(min);
    std::vector<Var> used = m.extract(min);
    std::vector<bool> is_used(static_cast<std::size_t>(f.num_vars) + 1, false);
    for (Var v : used) is_used[static_cast<std::size_t>(v.index)] = true;
    out.status = SatStatus::Sat;
    for (int v = 1; v <= f.num_vars; ++v)
        if (!is_used[static_cast<std::size_t>(v)]) out.variables.push_back(Var{v});
    return out;
}

} // namespace dispenser::bdd
