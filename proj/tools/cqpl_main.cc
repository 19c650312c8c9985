// Copyright 2026 The cqpl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cqpl/comm/scheduler.h"
#include "cqpl/kraus/equiv.h"
#include "cqpl/kraus/semantics.h"
#include "cqpl/kraus/trace_format.h"
#include "cqpl/syntax/parser.h"
#include "cqpl/types/checker.h"
#include "cqpl/types/comm_balance.h"

namespace {

using namespace cqpl;

constexpr int kExitOk = 0;
constexpr int kExitDiagnostics = 1;
constexpr int kExitRuntime = 2;
constexpr int kExitUsage = 3;

struct Source {
    std::string name;
    std::string text;
};

std::optional<Source> load(const std::string &path) {
    if (path.empty() || path == "-") {
        return Source{"<stdin>", std::string(std::istreambuf_iterator<char>(std::cin), {})};
    }
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cqpl: cannot open '" << path << "'\n";
        return std::nullopt;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return Source{path, ss.str()};
}

void print_error(const std::string &file, const Error &e) {
    std::cerr << file;
    if (e.pos().valid()) {
        std::cerr << ":" << e.pos().line << ":" << e.pos().column;
    }
    std::cerr << ": error[" << code_name(e.code()) << "]: " << e.what() << "\n";
}

/// Parses and checks; prints diagnostics and returns nullopt on errors.
std::optional<syntax::Program> front_end(const Source &src, bool balance) {
    syntax::Program program;
    try {
        program = syntax::parse_source(src.text);
    } catch (const Error &e) {
        print_error(src.name, e);
        return std::nullopt;
    }
    types::CheckResult result = types::check_program(program);
    for (const auto &d : result.diagnostics) {
        std::cerr << d.format(src.name) << "\n";
    }
    if (!result.ok()) {
        return std::nullopt;
    }
    if (balance) {
        types::BalanceResult b = types::comm_balance_check(program);
        if (b.diagnostic) {
            std::cerr << b.diagnostic->format(src.name) << "\n";
        }
    }
    return program;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"cqpl: check, run, and analyse cQPL programs"};
    app.require_subcommand(1);
    app.fallthrough();

    comm::RunOptions run_opts;
    std::string interleave = "roundrobin";
    bool trace = false;
    app.add_option("--seed", run_opts.seed, "Seed for measurement outcomes and random interleaving")
        ->capture_default_str();
    app.add_option("--qheap", run_opts.qheap, "Size of the quantum heap in qbits")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--sim-cap", run_opts.sim_cap, "Largest number of simultaneously allocated qbits")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--interleave", interleave, "Module scheduling order")
        ->check(CLI::IsMember({"roundrobin", "random"}))
        ->capture_default_str();
    app.add_flag("--trace", trace, "Log every executed statement to stderr");
    app.add_option("--recursion-limit", run_opts.recursion_limit, "Maximum procedure call depth")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--max-steps", run_opts.max_steps, "Statement budget across modules (0 = unlimited)")
        ->capture_default_str();

    std::string input;
    auto *run = app.add_subcommand("run", "Type-check and execute a program");
    run->add_option("input", input, "Program file (default: stdin)");

    auto *check = app.add_subcommand("check", "Parse and type-check only");
    check->add_option("input", input, "Program file (default: stdin)");

    bool global = false;
    bool json = false;
    auto *semantics = app.add_subcommand("semantics", "Print the extracted Kraus trace");
    semantics->add_option("input", input, "Program file (default: stdin)");
    semantics->add_flag("--global", global, "One trace for the whole program instead of one per module");
    semantics->add_flag("--json", json, "JSON output");

    std::string first, second, mode = "exact";
    int max_qbits = 6;
    auto *equiv = app.add_subcommand("equiv", "Compare two programs; prints true or false");
    equiv->add_option("a", first, "First program")->required();
    equiv->add_option("b", second, "Second program")->required();
    equiv->add_option("--mode", mode, "Equivalence kind")
        ->check(CLI::IsMember({"exact", "reorder", "channel"}))
        ->capture_default_str();
    equiv->add_option("--max-qbits", max_qbits, "Qbit budget for channel mode")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }
    run_opts.interleave = interleave == "random" ? comm::Interleave::Random : comm::Interleave::RoundRobin;
    if (trace) {
        run_opts.trace = &std::cerr;
    }

    kraus::ExploreOptions explore;
    explore.recursion_limit = run_opts.recursion_limit;
    if (run_opts.max_steps != 0) {
        explore.max_steps = run_opts.max_steps;
    }

    std::string file = input.empty() ? "<stdin>" : input;
    try {
        if (*equiv) {
            auto sa = load(first), sb = load(second);
            if (!sa || !sb) {
                return kExitUsage;
            }
            auto pa = front_end(*sa, false), pb = front_end(*sb, false);
            if (!pa || !pb) {
                return kExitDiagnostics;
            }
            kraus::EquivOptions eo;
            eo.mode = *kraus::equiv_mode_from_name(mode);
            eo.max_qbits = max_qbits;
            eo.explore = explore;
            std::cout << (kraus::programs_equiv(*pa, *pb, eo) ? "true" : "false") << "\n";
            return kExitOk;
        }

        auto src = load(input);
        if (!src) {
            return kExitUsage;
        }
        auto program = front_end(*src, !*semantics);
        if (!program) {
            return kExitDiagnostics;
        }
        if (*check) {
            return kExitOk;
        }
        if (*semantics) {
            if (global) {
                auto trace_global = kraus::extract_global(*program, explore);
                std::cout << (json ? kraus::format_json_global(trace_global) : kraus::format_text_global(trace_global));
            } else {
                auto modules = kraus::extract_semantics(*program, explore);
                std::cout << (json ? kraus::format_json(modules) : kraus::format_text(modules));
            }
            return kExitOk;
        }

        comm::StreamOutput out(std::cout, false);
        comm::RunResult result = comm::run_all(*program, run_opts, out);
        std::cout.flush();
        if (!result.ok()) {
            std::cerr << src->name;
            if (result.error->pos().valid()) {
                std::cerr << ":" << result.error->pos().line << ":" << result.error->pos().column;
            }
            std::cerr << ": error[" << code_name(result.error->code()) << "]: ";
            if (program->is_modular() && !result.failed_module.empty() &&
                result.error->code() != ErrorCode::E_DEADLOCK) {
                std::cerr << "in module " << result.failed_module << ": ";
            }
            std::cerr << result.error->what() << "\n";
            return kExitRuntime;
        }
        return kExitOk;
    } catch (const Error &e) {
        print_error(file, e);
        return kExitRuntime;
    }
}
