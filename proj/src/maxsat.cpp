/************************************************************************[maxsat.cpp]
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

#include "dispenser/maxsat.hpp"

#include <cassert>
#include <charconv>
#include <sstream>

namespace dispenser::maxsat {

std::uint64_t WeightedInstance::soft_weight_sum() const {
    std::uint64_t sum = 0;
    for (const SoftClause& sc : soft)
        if (__builtin_add_overflow(sum, sc.weight, &sum))
            throw WeightOverflow("sum of soft weights exceeds 64 bits");
    return sum;
}

namespace {

class BranchAndBound {
public:
    explicit BranchAndBound(const WeightedInstance& inst)
        : inst_(inst), n_(inst.num_vars), val_(static_cast<std::size_t>(inst.num_vars) + 1, -1) {
        for (const SoftClause& sc : inst_.soft)
            if (sc.weight < 1) throw Error("soft clause weight must be >= 1");
    }

    MaxSatResult run() {
        (void)inst_.soft_weight_sum(); // overflow pre-check
        search();
        MaxSatResult r;
        r.decisions = decisions_;
        if (!have_best_) return r; // HardUnsat
        r.status = SolveStatus::Optimal;
        r.cost = best_cost_;
        Assignment a(n_);
        for (int v = 1; v <= n_; ++v) a.set(Var{v}, best_[static_cast<std::size_t>(v)] == 1);
        r.model = std::move(a);
        return r;
    }

private:
    int8_t value_of(Lit l) const {
        int8_t v = val_[static_cast<std::size_t>(l.var().index)];
        if (v < 0) return -1;
        return (v == 1) == l.is_positive() ? 1 : 0;
    }

    void assign(int var, int8_t value) {
        val_[static_cast<std::size_t>(var)] = value;
        trail_.push_back(var);
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            val_[static_cast<std::size_t>(trail_.back())] = -1;
            trail_.pop_back();
        }
    }

    // Unit propagation over hard clauses until fixpoint; false on conflict.
    bool propagate() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const Clause& c : inst_.hard) {
                int unassigned = 0;
                int unit_code = 0;
                bool satisfied = false;
                for (Lit l : c) {
                    int8_t v = value_of(l);
                    if (v == 1) { satisfied = true; break; }
                    if (v == -1) {
                        ++unassigned;
                        unit_code = l.dimacs();
                        if (unassigned > 1) break;
                    }
                }
                if (satisfied || unassigned > 1) continue;
                if (unassigned == 0) return false; // falsified
                assign(unit_code < 0 ? -unit_code : unit_code, unit_code > 0 ? 1 : 0);
                changed = true;
            }
        }
        return true;
    }

    // Weight of soft clauses already fully falsified; a lower bound on the cost
    // of any completion of the current partial assignment.
    std::uint64_t falsified_soft() const {
        std::uint64_t w = 0;
        for (const SoftClause& sc : inst_.soft) {
            bool falsified = true;
            for (Lit l : sc.clause)
                if (value_of(l) != 0) { falsified = false; break; }
            if (falsified) w += sc.weight;
        }
        return w;
    }

    void search() {
        std::size_t mark = trail_.size();
        if (!propagate()) { undo_to(mark); return; }
        std::uint64_t bound = falsified_soft();
        if (have_best_ && bound >= best_cost_) { undo_to(mark); return; }

        int branch_var = 0;
        for (int v = 1; v <= n_; ++v)
            if (val_[static_cast<std::size_t>(v)] == -1) { branch_var = v; break; }

        if (branch_var == 0) {
            // Complete assignment; propagate() left no hard clause falsified.
            if (!have_best_ || bound < best_cost_) {
                have_best_ = true;
                best_cost_ = bound;
                best_ = val_;
            }
            undo_to(mark);
            return;
        }

        for (int8_t value : {int8_t{0}, int8_t{1}}) {
            ++decisions_;
            assign(branch_var, value);
            search();
            val_[static_cast<std::size_t>(branch_var)] = -1;
            trail_.pop_back();
        }
        undo_to(mark);
    }

    const WeightedInstance& inst_;
    int                     n_;
    std::vector<int8_t>     val_; // 1-based; -1 unassigned
    std::vector<int>        trail_;
    std::vector<int8_t>     best_;
    std::uint64_t           best_cost_ = 0;
    bool                    have_best_ = false;
    std::uint64_t           decisions_ = 0;
};

std::uint64_t parse_weight_token(const std::string& tok) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw DimacsError("unexpected token '" + tok + "' in wcnf clause data");
    return value;
}

int parse_lit_token(const std::string& tok) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw DimacsError("unexpected token '" + tok + "' in wcnf clause data");
    return value;
}

} // namespace

MaxSatResult solve(const WeightedInstance& inst) {
    return BranchAndBound(inst).run();
}

WeightedInstance encode_min_ones(const CnfFormula& f) {
    WeightedInstance w;
    w.num_vars = f.num_vars;
    w.hard = f.clauses;
    w.soft.reserve(static_cast<std::size_t>(f.num_vars));
    for (int v = 1; v <= f.num_vars; ++v) w.soft.push_back({Clause{-v}, 1});
    return w;
}

WeightedInstance encode_min_ones_weighted(const CnfFormula& f) {
    WeightedInstance w;
    w.num_vars = f.num_vars;
    const std::uint64_t clause_weight = static_cast<std::uint64_t>(f.num_vars) + 1;
    for (const Clause& c : f.clauses) w.soft.push_back({c, clause_weight});
    for (int v = 1; v <= f.num_vars; ++v) w.soft.push_back({Clause{-v}, 1});
    return w;
}

std::optional<Assignment> cardinality_minimum_model(const CnfFormula& f) {
    MaxSatResult r = solve(encode_min_ones(f));
    if (r.status == SolveStatus::HardUnsat) return std::nullopt;
    return r.model;
}

std::string export_wcnf(const WeightedInstance& inst) {
    std::uint64_t top = inst.soft_weight_sum();
    if (__builtin_add_overflow(top, std::uint64_t{1}, &top))
        throw WeightOverflow("wcnf top weight exceeds 64 bits");
    std::ostringstream out;
    out << "p wcnf " << inst.num_vars << ' ' << inst.hard.size() + inst.soft.size() << ' ' << top << '\n';
    for (const Clause& c : inst.hard) {
        out << top << ' ';
        for (Lit l : c) out << l.dimacs() << ' ';
        out << "0\n";
    }
    for (const SoftClause& sc : inst.soft) {
        out << sc.weight << ' ';
        for (Lit l : sc.clause) out << l.dimacs() << ' ';
        out << "0\n";
    }
    return out.str();
}

WeightedInstance parse_wcnf(std::string_view text) {
    std::istringstream in{std::string(text)};
    WeightedInstance w;
    bool have_header = false;
    long long declared_clauses = 0;
    std::uint64_t top = 0;
    bool in_clause = false;
    std::uint64_t weight = 0;
    std::vector<Lit> pending;
    std::size_t clauses_seen = 0;

    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok[0] == 'c') continue;
        if (tok == "p") {
            if (have_header) throw MalformedHeader("duplicate 'p' line");
            std::string fmt;
            long long n = -1, m = -1;
            unsigned long long t = 0;
            if (!(ls >> fmt >> n >> m >> t) || fmt != "wcnf" || n < 0 || m < 0 || t < 1)
                throw MalformedHeader("expected 'p wcnf <vars> <clauses> <top>'");
            std::string extra;
            if (ls >> extra) throw MalformedHeader("trailing tokens after 'p wcnf' header");
            w.num_vars = static_cast<int>(n);
            declared_clauses = m;
            top = t;
            have_header = true;
            continue;
        }
        if (!have_header) throw MalformedHeader("clause data before 'p wcnf' header");
        do {
            if (!in_clause) {
                weight = parse_weight_token(tok);
                if (weight < 1) throw DimacsError("wcnf clause weight must be >= 1");
                in_clause = true;
                continue;
            }
            int code = parse_lit_token(tok);
            if (code == 0) {
                Clause c{std::move(pending)};
                pending.clear();
                in_clause = false;
                ++clauses_seen;
                if (static_cast<long long>(clauses_seen) > declared_clauses)
                    throw ClauseCountMismatch("more clauses than the wcnf header declares");
                if (weight == top) w.hard.push_back(std::move(c));
                else w.soft.push_back({std::move(c), weight});
            } else {
                int v = code < 0 ? -code : code;
                if (v > w.num_vars)
                    throw LiteralOutOfRange("literal " + std::to_string(code) + " exceeds declared variable count " +
                                            std::to_string(w.num_vars));
                pending.push_back(Lit(code));
            }
        } while (ls >> tok);
    }
    if (!have_header) throw MalformedHeader("missing 'p wcnf' header");
    if (in_clause) throw UnterminatedClause("last wcnf clause is not terminated by 0");
    if (static_cast<long long>(clauses_seen) != declared_clauses)
        throw ClauseCountMismatch("wcnf header declares " + std::to_string(declared_clauses) + " clauses, found " +
                                  std::to_string(clauses_seen));
    return w;
}

} // namespace dispenser::maxsat
