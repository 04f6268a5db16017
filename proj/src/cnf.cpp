/***************************************************************************[cnf.cpp]
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

#include "dispenser/cnf.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>
#include <sstream>

namespace dispenser {

Clause::Clause(std::initializer_list<int> dimacs_codes) {
    lits_.reserve(dimacs_codes.size());
    for (int code : dimacs_codes) lits_.push_back(Lit(code));
    std::sort(lits_.begin(), lits_.end());
    lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
}

Clause::Clause(std::vector<Lit> lits) : lits_(std::move(lits)) {
    std::sort(lits_.begin(), lits_.end());
    lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
}

bool Clause::contains(Lit l) const {
    return std::binary_search(lits_.begin(), lits_.end(), l);
}

Assignment Assignment::from_bits(std::string_view bits) {
    Assignment a(static_cast<int>(bits.size()));
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != '0' && bits[i] != '1') throw Error("assignment bit-string must be over {0,1}");
        a.bits_[i] = bits[i] == '1';
    }
    return a;
}

Assignment Assignment::from_index(int num_vars, std::uint64_t x) {
    Assignment a(num_vars);
    for (int i = 0; i < num_vars; ++i)
        a.bits_[static_cast<std::size_t>(i)] = (x >> (num_vars - 1 - i)) & 1u;
    return a;
}

int Assignment::ones() const {
    return static_cast<int>(std::count(bits_.begin(), bits_.end(), true));
}

std::string Assignment::to_string() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) s[i] = '1';
    return s;
}

bool Assignment::leq(const Assignment& other) const {
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] && !other.bits_[i]) return false;
    return true;
}

bool satisfies(const Clause& c, const Assignment& a) {
    for (Lit l : c)
        if (a.value(l.var()) == l.is_positive()) return true;
    return false;
}

bool evaluate(const CnfFormula& f, const Assignment& a) {
    for (const Clause& c : f.clauses)
        if (!satisfies(c, a)) return false;
    return true;
}

namespace {

int parse_int_token(const std::string& tok) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw DimacsError("unexpected token '" + tok + "' in clause data");
    return value;
}

} // namespace

CnfFormula parse_dimacs(std::istream& in) {
    CnfFormula f;
    bool have_header = false;
    long long declared_clauses = 0;
    std::vector<Lit> pending;

    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue; // blank line
        if (tok[0] == 'c') continue; // comment line
        if (tok == "p") {
            if (have_header) throw MalformedHeader("duplicate 'p' line");
            std::string fmt;
            long long n = -1, m = -1;
            if (!(ls >> fmt >> n >> m) || fmt != "cnf" || n < 0 || m < 0)
                throw MalformedHeader("expected 'p cnf <vars> <clauses>'");
            std::string extra;
            if (ls >> extra) throw MalformedHeader("trailing tokens after 'p cnf' header");
            f.num_vars = static_cast<int>(n);
            declared_clauses = m;
            have_header = true;
            continue;
        }
        if (!have_header) throw MalformedHeader("clause data before 'p cnf' header");
        do {
            int code = parse_int_token(tok);
            if (code == 0) {
                f.clauses.emplace_back(std::move(pending));
                pending.clear();
                if (static_cast<long long>(f.clauses.size()) > declared_clauses)
                    throw ClauseCountMismatch("more clauses than the header declares");
            } else {
                int v = code < 0 ? -code : code;
                if (v > f.num_vars)
                    throw LiteralOutOfRange("literal " + std::to_string(code) + " exceeds declared variable count " +
                                            std::to_string(f.num_vars));
                pending.push_back(Lit(code));
            }
        } while (ls >> tok);
    }
    if (!have_header) throw MalformedHeader("missing 'p cnf' header");
    if (!pending.empty()) throw UnterminatedClause("last clause is not terminated by 0");
    if (static_cast<long long>(f.clauses.size()) != declared_clauses)
        throw ClauseCountMismatch("header declares " + std::to_string(declared_clauses) + " clauses, found " +
                                  std::to_string(f.clauses.size()));
    return f;
}

CnfFormula parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_dimacs(in);
}

void render_dimacs(const CnfFormula& f, std::ostream& out) {
    out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const Clause& c : f.clauses) {
        for (Lit l : c) out << l.dimacs() << ' ';
        out << "0\n";
    }
}

std::string render_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    render_dimacs(f, out);
    return out.str();
}

CnfFormula xor_chain(int k) {
    if (k < 1) throw Error("xor_chain requires k >= 1");
    CnfFormula f;
    f.num_vars = 2 * k;
    f.clauses.reserve(static_cast<std::size_t>(2 * k));
    for (int j = 1; j <= k; ++j) {
        int a = 2 * j - 1, b = 2 * j;
        f.clauses.push_back(Clause{a, b});
        f.clauses.push_back(Clause{-a, -b});
    }
    return f;
}

} // namespace dispenser
