/***********************************************************************[engines.hpp]
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

#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "dispenser/bdd.hpp"
#include "dispenser/cnf.hpp"
#include "dispenser/maxsat.hpp"
#include "dispenser/oracle.hpp"

namespace dispenser::engines {

/// Clause { ~v : mu(v) = 1 }. Excludes mu and all its pointwise supersets while
/// keeping every other subset-minimal model reachable. Empty for the all-zero
/// model, which ends the enumeration on the next round.
Clause blocking_clause(const Assignment& mu);

/// One subset-minimal model at a time from the current (strengthened) formula
/// state. Every produced assignment is a model of the current state and
/// subset-minimal for the original formula.
class MinimalModelProvider {
public:
    virtual ~MinimalModelProvider() = default;

    virtual std::optional<Assignment> produce() = 0;
    virtual void                      strengthen(const Clause& c) = 0;
    virtual std::string_view          name() const = 0;
};

/// Re-solves the growing hard-clause set for a cardinality-minimum model.
class MaxSatProvider final : public MinimalModelProvider {
public:
    explicit MaxSatProvider(CnfFormula f) : working_(std::move(f)) {}

    std::optional<Assignment> produce() override;
    void                      strengthen(const Clause& c) override { working_.clauses.push_back(c); }
    std::string_view          name() const override { return "maxsat-enum"; }

    std::uint64_t decisions() const { return decisions_; }

private:
    CnfFormula    working_;
    std::uint64_t decisions_ = 0;
};

/// Maintains the formula as a BDD and reads lexicographically minimum models;
/// blocking clauses are conjoined with apply.
class BddProvider final : public MinimalModelProvider {
public:
    explicit BddProvider(const CnfFormula& f);
    BddProvider(const CnfFormula& f, const std::vector<int>& var_order);

    std::optional<Assignment> produce() override { return manager_.lex_min_model(root_); }
    void                      strengthen(const Clause& c) override;
    std::string_view          name() const override { return "bdd-enum"; }

    std::size_t formula_bdd_size() const { return formula_bdd_size_; }

private:
    bdd::BddManager manager_;
    bdd::NodeRef    root_;
    std::size_t     formula_bdd_size_;
};

/// Return false to stop the enumeration early.
using ModelVisitor = std::function<bool(const Assignment&)>;

struct EnumerationSummary {
    std::uint64_t models_visited = 0;
    bool          truncated = false;     // cap reached with models left over
    bool          stopped_early = false; // visitor requested the stop
};

/// The visit / block / re-solve loop. Each subset-minimal model of the
/// provider's original formula is visited exactly once, in provider order,
/// until the strengthened formula becomes unsatisfiable or the cap is hit.
EnumerationSummary generate_minimal_models(MinimalModelProvider& provider, const ModelVisitor& visit,
                                           std::optional<std::uint64_t> cap = std::nullopt);

enum class Engine { MaxSatEnum, BddEnum, BddDirect, Oracle };

std::string_view      engine_name(Engine e);
std::optional<Engine> engine_from_name(std::string_view name);

struct DispensableReport {
    SatStatus        status = SatStatus::Unsat;
    std::vector<Var> dispensable; // sorted by index; all variables when Unsat
    Engine           engine = Engine::BddDirect;

    std::uint64_t                models_visited = 0;
    std::optional<std::uint64_t> num_minimal_models; // set when the count is exact
    bool                         truncated = false;  // dispensable set may over-approximate

    std::chrono::duration<double, std::milli> elapsed{0};
    std::optional<std::uint64_t>              solver_decisions; // maxsat engines
    std::optional<std::size_t>                bdd_size;         // bdd engines
};

struct DispensableOptions {
    std::uint64_t                   max_models = 1'000'000;
    bool                            early_stop = true; // stop once every variable was 1 somewhere
    std::optional<std::vector<int>> var_order;         // bdd engines only
    int                             oracle_var_limit = oracle::kDefaultVarLimit;
};

/// All four engines return identical dispensable sets and statuses on the
/// same input.
DispensableReport dispensable(const CnfFormula& f, Engine engine, const DispensableOptions& options = {});

struct CrossCheckReport {
    std::vector<DispensableReport> reports;
    bool                           includes_oracle = false;
};

/// Runs maxsat-enum, bdd-enum, bdd-direct and (within the variable guard) the
/// oracle, then asserts pairwise agreement on dispensable sets, statuses and
/// minimal-model counts. Disagreement throws EngineDisagreement carrying the
/// differing outputs; it is a bug signal, never resolved silently.
CrossCheckReport cross_check(const CnfFormula& f, const DispensableOptions& options = {});

} // namespace dispenser::engines
