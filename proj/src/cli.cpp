/***************************************************************************[cli.cpp]
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

#include "dispenser/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dispenser/engines.hpp"

namespace dispenser::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct RunConfig {
    std::string   input_path;
    std::string   engine = "bdd-direct";
    std::string   mode = "dispensable";
    std::uint64_t max_models = 1'000'000;
    std::string   order_csv;
    std::string   format = "text";
};

std::string read_input(const RunConfig& cfg, std::istream& in) {
    if (cfg.input_path == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(cfg.input_path);
    if (!file) throw Error("cannot open input file '" + cfg.input_path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

std::vector<int> parse_order(const std::string& csv, int num_vars) {
    std::vector<int> order;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            order.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw Error("--order expects a comma-separated list of integers");
        }
    }
    if (static_cast<int>(order.size()) != num_vars)
        throw Error("--order must list all " + std::to_string(num_vars) + " variables");
    std::vector<bool> seen(static_cast<std::size_t>(num_vars) + 1, false);
    for (int v : order) {
        if (v < 1 || v > num_vars || seen[static_cast<std::size_t>(v)])
            throw Error("--order must be a permutation of 1.." + std::to_string(num_vars));
        seen[static_cast<std::size_t>(v)] = true;
    }
    return order;
}

std::string format_var_set(const std::vector<Var>& vars) {
    std::string out = "{";
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(vars[i].index);
    }
    out += '}';
    return out;
}

nlohmann::json report_to_json(const engines::DispensableReport& r) {
    nlohmann::json j;
    j["status"] = r.status == SatStatus::Sat ? "sat" : "unsat";
    j["engine"] = std::string(engines::engine_name(r.engine));
    std::vector<int> vars;
    for (Var v : r.dispensable) vars.push_back(v.index);
    j["dispensable"] = vars;
    j["truncated"] = r.truncated;
    if (r.num_minimal_models) j["num_minimal_models"] = *r.num_minimal_models;
    j["stats"]["elapsed_ms"] = r.elapsed.count();
    if (r.bdd_size) j["stats"]["bdd_size"] = *r.bdd_size;
    if (r.solver_decisions) j["stats"]["solver_decisions"] = *r.solver_decisions;
    return j;
}

int run_dispensable(const CnfFormula& f, engines::Engine engine, const engines::DispensableOptions& opt,
                    const RunConfig& cfg, std::ostream& out) {
    engines::DispensableReport r = engines::dispensable(f, engine, opt);
    if (cfg.format == "json") {
        out << report_to_json(r).dump() << '\n';
        return kExitOk;
    }
    out << "status=" << (r.status == SatStatus::Sat ? "sat" : "unsat")
        << " dispensable=" << format_var_set(r.dispensable);
    if (r.truncated) out << " truncated=true";
    out << '\n';
    return kExitOk;
}

int run_enumerate(const CnfFormula& f, engines::Engine engine, const engines::DispensableOptions& opt,
                  const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::vector<std::string> models;
    bool truncated = false;
    std::uint64_t visited = 0;

    if (engine == engines::Engine::Oracle) {
        for (const Assignment& mu : oracle::subset_minimal_models(f, opt.oracle_var_limit))
            models.push_back(mu.to_string());
        visited = models.size();
    } else {
        std::unique_ptr<engines::MinimalModelProvider> provider;
        if (engine == engines::Engine::MaxSatEnum) {
            provider = std::make_unique<engines::MaxSatProvider>(f);
        } else if (opt.var_order) {
            provider = std::make_unique<engines::BddProvider>(f, *opt.var_order);
        } else {
            provider = std::make_unique<engines::BddProvider>(f);
        }
        engines::EnumerationSummary s = engines::generate_minimal_models(
            *provider, [&](const Assignment& mu) { models.push_back(mu.to_string()); return true; },
            opt.max_models);
        truncated = s.truncated;
        visited = s.models_visited;
    }

    if (cfg.format == "json") {
        nlohmann::json j;
        j["status"] = models.empty() ? "unsat" : "sat";
        j["engine"] = std::string(engines::engine_name(engine));
        j["models"] = models;
        j["truncated"] = truncated;
        if (!truncated) j["num_minimal_models"] = visited;
        out << j.dump() << '\n';
        return kExitOk;
    }
    for (const std::string& m : models) out << m << '\n';
    if (truncated) err << "warning: model cap reached, enumeration truncated\n";
    return kExitOk;
}

int run_check(const CnfFormula& f, const engines::DispensableOptions& opt, const RunConfig& cfg, std::ostream& out,
              std::ostream& err) {
    engines::CrossCheckReport rep;
    try {
        rep = engines::cross_check(f, opt);
    } catch (const EngineDisagreement& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    if (cfg.format == "json") {
        nlohmann::json j;
        j["agreement"] = true;
        j["engines"] = nlohmann::json::array();
        for (const engines::DispensableReport& r : rep.reports) j["engines"].push_back(report_to_json(r));
        out << j.dump() << '\n';
        return kExitOk;
    }
    for (const engines::DispensableReport& r : rep.reports) {
        out << "engine=" << engines::engine_name(r.engine)
            << " status=" << (r.status == SatStatus::Sat ? "sat" : "unsat")
            << " dispensable=" << format_var_set(r.dispensable);
        if (r.num_minimal_models) out << " models=" << *r.num_minimal_models;
        out << " elapsed_ms=" << r.elapsed.count() << '\n';
    }
    out << "agreement=yes\n";
    return kExitOk;
}

int run_stats(const CnfFormula& f, const engines::DispensableOptions& opt, const RunConfig& cfg, std::ostream& out) {
    bdd::BddManager m = opt.var_order ? bdd::BddManager(f.num_vars, *opt.var_order) : bdd::BddManager(f.num_vars);
    bdd::NodeRef root = m.compile_cnf(f);
    const std::size_t bdd_size = m.size(root);
    const std::size_t minimal_size = m.size(m.minimal(root));
    if (cfg.format == "json") {
        nlohmann::json j;
        j["vars"] = f.num_vars;
        j["clauses"] = f.num_clauses();
        j["bdd_size"] = bdd_size;
        j["minimal_bdd_size"] = minimal_size;
        out << j.dump() << '\n';
        return kExitOk;
    }
    out << "vars=" << f.num_vars << " clauses=" << f.num_clauses() << " bdd_size=" << bdd_size
        << " minimal_bdd_size=" << minimal_size << '\n';
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    RunConfig cfg;
    CLI::App app{"dispensable-variable analysis of CNF formulas", "dispenser"};
    app.add_option("--engine", cfg.engine, "maxsat-enum | bdd-enum | bdd-direct | oracle")
        ->check(CLI::IsMember({"maxsat-enum", "bdd-enum", "bdd-direct", "oracle"}));
    app.add_option("--mode", cfg.mode, "dispensable | enumerate | check | export-wcnf | stats")
        ->check(CLI::IsMember({"dispensable", "enumerate", "check", "export-wcnf", "stats"}));
    app.add_option("--max-models", cfg.max_models, "cap on enumerated minimal models")
        ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
    app.add_option("--order", cfg.order_csv, "BDD variable order, e.g. 2,1,3 (bdd engines)");
    app.add_option("--format", cfg.format, "text | json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("input", cfg.input_path, "DIMACS CNF file, or - for standard input")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        const std::string text = read_input(cfg, in);
        const CnfFormula f = parse_dimacs(text);

        engines::DispensableOptions opt;
        opt.max_models = cfg.max_models;
        if (!cfg.order_csv.empty()) opt.var_order = parse_order(cfg.order_csv, f.num_vars);

        const auto engine = engines::engine_from_name(cfg.engine);
        if (!engine) {
            err << "error: unknown engine '" << cfg.engine << "'\n";
            return kExitUsage;
        }

        if (cfg.mode == "dispensable") return run_dispensable(f, *engine, opt, cfg, out);
        if (cfg.mode == "enumerate") {
            if (*engine == engines::Engine::BddDirect) {
                err << "error: engine bdd-direct does not enumerate models; use maxsat-enum, bdd-enum or oracle\n";
                return kExitUsage;
            }
            return run_enumerate(f, *engine, opt, cfg, out, err);
        }
        if (cfg.mode == "check") return run_check(f, opt, cfg, out, err);
        if (cfg.mode == "export-wcnf") {
            out << maxsat::export_wcnf(maxsat::encode_min_ones(f));
            return kExitOk;
        }
        return run_stats(f, opt, cfg, out);
    } catch (const TooManyVariables& e) {
        err << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const WeightOverflow& e) {
        err << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace dispenser::cli
