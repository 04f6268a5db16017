/***************************************************************************[cnf.hpp]
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

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dispenser/errors.hpp"

namespace dispenser {

enum class SatStatus { Sat, Unsat };

/// Propositional variable v_i, 1-based as in DIMACS.
struct Var {
    int index = 0;

    friend auto operator<=>(const Var&, const Var&) = default;
};

/// A variable or its negation, stored as a non-zero signed DIMACS code.
class Lit {
public:
    explicit Lit(int dimacs_code) : code_(dimacs_code) {
        if (code_ == 0) throw Error("literal code must be non-zero");
    }
    static Lit positive(Var v) { return Lit(v.index); }
    static Lit negative(Var v) { return Lit(-v.index); }

    Var  var() const { return Var{code_ < 0 ? -code_ : code_}; }
    bool is_positive() const { return code_ > 0; }
    int  dimacs() const { return code_; }

    Lit operator-() const { return Lit(-code_); }

    friend bool operator==(Lit a, Lit b) { return a.code_ == b.code_; }
    // Variable-major order, negative literal before positive.
    friend bool operator<(Lit a, Lit b) {
        int va = a.var().index, vb = b.var().index;
        return va != vb ? va < vb : a.code_ < b.code_;
    }

private:
    int code_;
};

/// Duplicate-free set of literals, kept sorted. May be empty (the unsatisfiable
/// clause). A clause holding both v and ~v is a tautology and is kept as-is.
class Clause {
public:
    Clause() = default;
    Clause(std::initializer_list<int> dimacs_codes);
    explicit Clause(std::vector<Lit> lits);

    bool        empty() const { return lits_.empty(); }
    std::size_t size() const { return lits_.size(); }
    bool        contains(Lit l) const;

    const std::vector<Lit>& literals() const { return lits_; }
    auto begin() const { return lits_.begin(); }
    auto end() const { return lits_.end(); }

    friend bool operator==(const Clause&, const Clause&) = default;

private:
    std::vector<Lit> lits_;
};

/// CNF formula: declared variable count plus an ordered clause list. Clause order
/// is preserved from the input; no engine may depend on it for correctness.
struct CnfFormula {
    int                 num_vars = 0;
    std::vector<Clause> clauses;

    int num_clauses() const { return static_cast<int>(clauses.size()); }

    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

/// Total map from v_1..v_n to {0,1}, held as a dense bit-vector. Renders as a
/// bit-string with v_1 leftmost ("01", "10", ...).
class Assignment {
public:
    Assignment() = default;
    explicit Assignment(int num_vars) : bits_(static_cast<std::size_t>(num_vars), false) {}

    static Assignment from_bits(std::string_view bits);
    /// Assignment number x in lexicographic order: v_1 is the most significant bit.
    static Assignment from_index(int num_vars, std::uint64_t x);

    int  num_vars() const { return static_cast<int>(bits_.size()); }
    bool value(Var v) const { return bits_[static_cast<std::size_t>(v.index - 1)]; }
    void set(Var v, bool b) { bits_[static_cast<std::size_t>(v.index - 1)] = b; }

    int         ones() const;
    std::string to_string() const;

    /// Pointwise order: this(v) <= other(v) for every variable.
    bool leq(const Assignment& other) const;

    friend bool operator==(const Assignment&, const Assignment&) = default;
    // Lexicographic, v_1 most significant, 0 before 1.
    friend bool operator<(const Assignment& a, const Assignment& b) { return a.bits_ < b.bits_; }

private:
    std::vector<bool> bits_;
};

bool satisfies(const Clause& c, const Assignment& a);

/// True iff every clause holds a literal satisfied by `a`. The empty conjunction
/// is true; any empty clause forces false.
bool evaluate(const CnfFormula& f, const Assignment& a);

CnfFormula  parse_dimacs(std::istream& in);
CnfFormula  parse_dimacs(std::string_view text);
void        render_dimacs(const CnfFormula& f, std::ostream& out);
std::string render_dimacs(const CnfFormula& f);

/// 2k-variable, 2k-clause family: per block j, (v_{2j-1} | v_{2j}) and
/// (~v_{2j-1} | ~v_{2j}). Has exactly 2^k models and all of them are minimal.
CnfFormula xor_chain(int k);

} // namespace dispenser
