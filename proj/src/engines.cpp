/***********************************************************************[engines.cpp]
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

#include "dispenser/engines.hpp"

#include <cassert>
#include <sstream>

namespace dispenser::engines {

Clause blocking_clause(const Assignment& mu) {
    std::vector<Lit> lits;
    for (int v = 1; v <= mu.num_vars(); ++v)
        if (mu.value(Var{v})) lits.push_back(Lit::negative(Var{v}));
    return Clause(std::move(lits));
}

std::optional<Assignment> MaxSatProvider::produce() {
    maxsat::MaxSatResult r = maxsat::solve(maxsat::encode_min_ones(working_));
    decisions_ += r.decisions;
    if (r.status == maxsat::SolveStatus::HardUnsat) return std::nullopt;
    return r.model;
}

BddProvider::BddProvider(const CnfFormula& f)
    : manager_(f.num_vars), root_(manager_.compile_cnf(f)), formula_bdd_size_(manager_.size(root_)) {}

BddProvider::BddProvider(const CnfFormula& f, const std::vector<int>& var_order)
    : manager_(f.num_vars, var_order), root_(manager_.compile_cnf(f)), formula_bdd_size_(manager_.size(root_)) {}

void BddProvider::strengthen(const Clause& c) {
    root_ = manager_.apply(bdd::Op::And, root_, manager_.from_clause(c));
}

EnumerationSummary generate_minimal_models(MinimalModelProvider& provider, const ModelVisitor& visit,
                                           std::optional<std::uint64_t> cap) {
    EnumerationSummary summary;
    for (;;) {
        if (cap && summary.models_visited == *cap) {
            // one probe to report honestly whether anything was cut off
            summary.truncated = provider.produce().has_value();
            break;
        }
        std::optional<Assignment> mu = provider.produce();
        if (!mu) break;
        ++summary.models_visited;
        const bool keep_going = visit(*mu);
        if (!keep_going) {
            summary.stopped_early = true;
            break;
        }
        provider.strengthen(blocking_clause(*mu));
    }
    return summary;
}

std::string_view engine_name(Engine e) {
    switch (e) {
        case Engine::MaxSatEnum: return "maxsat-enum";
        case Engine::BddEnum: return "bdd-enum";
        case Engine::BddDirect: return "bdd-direct";
        case Engine::Oracle: return "oracle";
    }
    return "unknown";
}

std::optional<Engine> engine_from_name(std::string_view name) {
    if (name == "maxsat-enum") return Engine::MaxSatEnum;
    if (name == "bdd-enum") return Engine::BddEnum;
    if (name == "bdd-direct") return Engine::BddDirect;
    if (name == "oracle") return Engine::Oracle;
    return std::nullopt;
}

namespace {

std::vector<Var> all_variables(int n) {
    std::vector<Var> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) out.push_back(Var{v});
    return out;
}

std::unique_ptr<MinimalModelProvider> make_provider(const CnfFormula& f, Engine e, const DispensableOptions& opt) {
    if (e == Engine::MaxSatEnum) return std::make_unique<MaxSatProvider>(f);
    assert(e == Engine::BddEnum);
    if (opt.var_order) return std::make_unique<BddProvider>(f, *opt.var_order);
    return std::make_unique<BddProvider>(f);
}

DispensableReport enumerate_dispensable(const CnfFormula& f, Engine e, const DispensableOptions& opt) {
    DispensableReport r;
    r.engine = e;
    const int n = f.num_vars;

    auto provider = make_provider(f, e, opt);

    std::vector<bool> seen_one(static_cast<std::size_t>(n) + 1, false);
    int saturation = 0;
    auto visit = [&](const Assignment& mu) {
        for (int v = 1; v <= n; ++v)
            if (mu.value(Var{v}) && !seen_one[static_cast<std::size_t>(v)]) {
                seen_one[static_cast<std::size_t>(v)] = true;
                ++saturation;
            }
        // once every variable was 1 somewhere, the dispensable set is already empty
        return !opt.early_stop || saturation < n;
    };

    EnumerationSummary summary = generate_minimal_models(*provider, visit, opt.max_models);
    r.models_visited = summary.models_visited;
    r.truncated = summary.truncated;
    if (summary.models_visited == 0) {
        r.status = SatStatus::Unsat;
        r.dispensable = all_variables(n);
    } else {
        r.status = SatStatus::Sat;
        for (int v = 1; v <= n; ++v)
            if (!seen_one[static_cast<std::size_t>(v)]) r.dispensable.push_back(Var{v});
        if (!summary.truncated && !summary.stopped_early) r.num_minimal_models = summary.models_visited;
    }

    if (e == Engine::MaxSatEnum)
        r.solver_decisions = static_cast<MaxSatProvider&>(*provider).decisions();
    else
        r.bdd_size = static_cast<BddProvider&>(*provider).formula_bdd_size();
    return r;
}

} // namespace

DispensableReport dispensable(const CnfFormula& f, Engine engine, const DispensableOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    DispensableReport r;
    switch (engine) {
        case Engine::Oracle: {
            r.engine = engine;
            oracle::DispensableSet d = oracle::dispensable_oracle(f, options.oracle_var_limit);
            r.status = d.status;
            r.dispensable = std::move(d.variables);
            const std::uint64_t count = oracle::subset_minimal_models(f, options.oracle_var_limit).size();
            r.models_visited = count;
            r.num_minimal_models = count;
            break;
        }
        case Engine::BddDirect: {
            r.engine = engine;
            bdd::BddManager m = options.var_order ? bdd::BddManager(f.num_vars, *options.var_order)
                                                  : bdd::BddManager(f.num_vars);
            bdd::BddDispensable d = dispensable_via_bdd(m, f);
            r.status = d.status;
            r.dispensable = std::move(d.variables);
            r.bdd_size = d.formula_bdd_size;
            break;
        }
        case Engine::MaxSatEnum:
        case Engine::BddEnum:
            r = enumerate_dispensable(f, engine, options);
            break;
    }
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

namespace {

std::string format_report_line(const DispensableReport& r) {
    std::ostringstream out;
    out << engine_name(r.engine) << ": status=" << (r.status == SatStatus::Sat ? "sat" : "unsat")
        << " dispensable={";
    for (std::size_t i = 0; i < r.dispensable.size(); ++i) {
        if (i) out << ',';
        out << r.dispensable[i].index;
    }
    out << '}';
    if (r.num_minimal_models) out << " models=" << *r.num_minimal_models;
    return out.str();
}

} // namespace

CrossCheckReport cross_check(const CnfFormula& f, const DispensableOptions& options) {
    DispensableOptions opt = options;
    opt.early_stop = false; // counts must be exact to compare

    CrossCheckReport rep;
    rep.reports.push_back(dispensable(f, Engine::MaxSatEnum, opt));
    rep.reports.push_back(dispensable(f, Engine::BddEnum, opt));
    rep.reports.push_back(dispensable(f, Engine::BddDirect, opt));
    rep.includes_oracle = f.num_vars <= opt.oracle_var_limit;
    if (rep.includes_oracle) rep.reports.push_back(dispensable(f, Engine::Oracle, opt));

    const DispensableReport& first = rep.reports.front();
    bool agree = true;
    for (const DispensableReport& r : rep.reports)
        if (r.status != first.status || r.dispensable != first.dispensable) agree = false;
    std::optional<std::uint64_t> count;
    for (const DispensableReport& r : rep.reports) {
        if (!r.num_minimal_models) continue;
        if (count && *count != *r.num_minimal_models) agree = false;
        count = r.num_minimal_models;
    }
    if (!agree) {
        std::ostringstream msg;
        msg << "engines disagree on " << render_dimacs(f);
        for (const DispensableReport& r : rep.reports) msg << format_report_line(r) << '\n';
        throw EngineDisagreement(msg.str());
    }
    return rep;
}

} // namespace dispenser::engines
