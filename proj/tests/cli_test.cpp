/**************************************************************************[cli_test.cpp]
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

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dispenser/cli.hpp"
#include "dispenser/cnf.hpp"

using dispenser::cli::run;

namespace {

struct CliResult {
    int         code;
    std::string out;
    std::string err;
};

CliResult invoke(const std::vector<std::string>& args, const std::string& stdin_text = "") {
    std::ostringstream out, err;
    std::istringstream in(stdin_text);
    int code = run(args, out, err, in);
    return {code, out.str(), err.str()};
}

const std::string kXor1 = "p cnf 2 2\n1 2 0\n-1 -2 0\n";
const std::string kXor3 = render_dimacs(dispenser::xor_chain(3));

} // namespace

TEST_CASE("dispensable mode text output") {
    CliResult r = invoke({"--engine", "bdd-direct", "--mode", "dispensable", "-"}, kXor1);
    CHECK(r.code == 0);
    CHECK(r.out == "status=sat dispensable={}\n");
    CHECK(r.err.empty());
}

TEST_CASE("defaults are bdd-direct and dispensable") {
    CliResult r = invoke({"-"}, kXor1);
    CHECK(r.code == 0);
    CHECK(r.out == "status=sat dispensable={}\n");
}

TEST_CASE("dispensable mode on a non-trivial set") {
    CliResult r = invoke({"-"}, "p cnf 2 1\n1 0\n");
    CHECK(r.code == 0);
    CHECK(r.out == "status=sat dispensable={2}\n");
}

TEST_CASE("an unsatisfiable input is a result, not an error") {
    for (const char* engine : {"maxsat-enum", "bdd-enum", "bdd-direct", "oracle"}) {
        CliResult r = invoke({"--engine", engine, "-"}, "p cnf 1 2\n1 0\n-1 0\n");
        CHECK(r.code == 0);
        CHECK(r.out == "status=unsat dispensable={1}\n");
    }
}

TEST_CASE("enumerate mode prints one bit-string per model") {
    CliResult r = invoke({"--engine", "maxsat-enum", "--mode", "enumerate", "-"}, kXor3);
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        CHECK(line.size() == 6);
        ++count;
    }
    CHECK(count == 8);
}

TEST_CASE("enumerate honours the model cap") {
    CliResult r = invoke({"--engine", "bdd-enum", "--mode", "enumerate", "--max-models", "3", "-"}, kXor3);
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 3);
    CHECK(r.err.find("truncated") != std::string::npos);
}

TEST_CASE("enumerate rejects bdd-direct") {
    CliResult r = invoke({"--engine", "bdd-direct", "--mode", "enumerate", "-"}, kXor1);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
}

TEST_CASE("check mode reports agreement") {
    CliResult r = invoke({"--mode", "check", "-"}, kXor1);
    CHECK(r.code == 0);
    CHECK(r.out.find("agreement=yes") != std::string::npos);
    CHECK(r.out.find("engine=maxsat-enum") != std::string::npos);
    CHECK(r.out.find("engine=oracle") != std::string::npos);
}

TEST_CASE("export-wcnf mode") {
    CliResult r = invoke({"--mode", "export-wcnf", "-"}, "p cnf 2 1\n1 2 0\n");
    CHECK(r.code == 0);
    CHECK(r.out == "p wcnf 2 3 3\n3 1 2 0\n1 -1 0\n1 -2 0\n");
}

TEST_CASE("stats mode") {
    CliResult r = invoke({"--mode", "stats", "-"}, kXor1);
    CHECK(r.code == 0);
    CHECK(r.out == "vars=2 clauses=2 bdd_size=5 minimal_bdd_size=5\n");
}

TEST_CASE("json output carries the documented keys and round-trips") {
    CliResult r = invoke({"--format", "json", "--engine", "maxsat-enum", "-"}, kXor1);
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["status"] == "sat");
    CHECK(j["engine"] == "maxsat-enum");
    CHECK(j["dispensable"].is_array());
    CHECK(j["dispensable"].empty());
    CHECK(j["truncated"] == false);
    CHECK(j["stats"].contains("elapsed_ms"));
    CHECK(j["stats"].contains("solver_decisions"));
}

TEST_CASE("json enumerate output") {
    CliResult r = invoke({"--format", "json", "--engine", "bdd-enum", "--mode", "enumerate", "-"}, kXor1);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["models"] == nlohmann::json::array({"01", "10"}));
    CHECK(j["num_minimal_models"] == 2);
}

TEST_CASE("text output is byte-identical across runs") {
    for (auto args : {std::vector<std::string>{"-"},
                      std::vector<std::string>{"--engine", "oracle", "-"},
                      std::vector<std::string>{"--engine", "bdd-enum", "--mode", "enumerate", "-"}}) {
        CliResult a = invoke(args, kXor3);
        CliResult b = invoke(args, kXor3);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("files are read like standard input") {
    const std::string path = "cli_test_input.cnf";
    {
        std::ofstream f(path);
        f << kXor1;
    }
    CliResult file_run = invoke({path});
    CliResult stdin_run = invoke({"-"}, kXor1);
    CHECK(file_run.code == 0);
    CHECK(file_run.out == stdin_run.out);
    std::remove(path.c_str());
}

TEST_CASE("usage and parse failures exit 2") {
    CHECK(invoke({}).code == 2);                                       // missing input
    CHECK(invoke({"--engine", "warp-drive", "-"}, kXor1).code == 2);   // unknown engine
    CHECK(invoke({"--mode", "dance", "-"}, kXor1).code == 2);          // unknown mode
    CHECK(invoke({"no_such_file.cnf"}).code == 2);                     // unreadable input
    CHECK(invoke({"-"}, "p cnf 1\n").code == 2);                       // malformed header
    CHECK(invoke({"-"}, "p cnf 2 1\n3 0\n").code == 2);                // literal out of range
    CHECK(invoke({"--max-models", "0", "-"}, kXor1).code == 2);        // cap below 1
    CHECK(invoke({"--order", "1,1", "-"}, kXor1).code == 2);           // not a permutation
    CHECK(invoke({"--order", "1", "-"}, kXor1).code == 2);             // too short
    CHECK(invoke({"--order", "1,x", "-"}, kXor1).code == 2);           // not integers
}

TEST_CASE("the oracle guard exits 3") {
    dispenser::CnfFormula wide{30, {dispenser::Clause{1, 2}}};
    CliResult r = invoke({"--engine", "oracle", "-"}, render_dimacs(wide));
    CHECK(r.code == 3);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("a variable order flag flows through to the bdd engines") {
    CliResult a = invoke({"--engine", "bdd-direct", "--order", "2,1", "-"}, kXor1);
    CHECK(a.code == 0);
    CHECK(a.out == "status=sat dispensable={}\n");
}

TEST_CASE("help returns success") {
    CliResult r = invoke({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("--engine") != std::string::npos);
}
