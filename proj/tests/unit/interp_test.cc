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

#include <gtest/gtest.h>

#include "../support/test_support.h"
#include "cqpl/comm/scheduler.h"
#include "cqpl/interp/machine.h"

namespace {

using namespace cqpl;
using namespace cqpl::interp;

std::vector<std::string> run(const std::string &src, uint64_t seed = 0) {
    auto p = testing_support::load_checked(src);
    BufferOutput out;
    comm::RunOptions opts;
    opts.seed = seed;
    auto r = comm::run_all(p, opts, out);
    if (!r.ok()) {
        throw *r.error;
    }
    return out.lines;
}

ClassicalValue eval(const std::string &expr) {
    auto p = syntax::parse_source("print " + expr + ";");
    const auto &pr = std::get<syntax::stmt::Print>(p.statements[0]->node);
    return eval_expr(*std::get<syntax::ExprPtr>(pr.what), [](const std::string &name, SourcePos) -> ClassicalValue {
        throw Error(ErrorCode::E_UNDECLARED, name);
    });
}

TEST(EvalExpr, Examples) {
    EXPECT_EQ(eval("7+3*5").as_int(), 22);
    EXPECT_TRUE(eval("(1 < 2) & !(3 = 4)").truthy());
    try {
        eval("1/0");
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::E_DIV_ZERO);
    }
}

TEST(EvalExpr, IntegerDivisionTruncatesTowardZero) {
    EXPECT_EQ(eval("7/2").as_int(), 3);
    EXPECT_EQ(eval("(0-7)/2").as_int(), -3);
    EXPECT_DOUBLE_EQ(eval("7.0/2").as_double(), 3.5);
}

TEST(EvalExpr, ComparisonsYieldBits) {
    EXPECT_EQ(eval("3 > 2"), ClassicalValue::bit(true));
    EXPECT_EQ(eval("3 <= 2"), ClassicalValue::bit(false));
}

TEST(Exec, WhileLoop) {
    EXPECT_EQ(run("new int loop := 10; while (loop > 5) do { print loop; loop := loop - 1; };"),
              (std::vector<std::string>{"10", "9", "8", "7", "6"}));
}

TEST(Exec, ThenBranchIsOutcomeOne) {
    for (uint64_t seed = 0; seed < 8; seed++) {
        EXPECT_EQ(run("new qbit q := 1; measure q then { print \"A\"; } else { print \"B\"; };", seed),
                  std::vector<std::string>{"A"});
        EXPECT_EQ(run("new qbit q := 0; measure q then { print \"A\"; } else { print \"B\"; };", seed),
                  std::vector<std::string>{"B"});
    }
}

TEST(Exec, SkipDoesNothing) {
    EXPECT_EQ(run("new int a := 2; skip; print a;"), std::vector<std::string>{"2"});
}

TEST(Exec, DumpAppendsToOpenLine) {
    EXPECT_EQ(run("new qbit a := 0; print \"State:\"; dump a; dump a;"),
              (std::vector<std::string>{"State: 1 |0>", "1 |0>"}));
}

TEST(Procedures, ResultTuple) {
    EXPECT_EQ(run(testing_support::read_file("programs/procedures.qpl")), std::vector<std::string>{"4"});
}

TEST(Procedures, ClassicalArgumentsByValue) {
    EXPECT_EQ(run("proc f: a:int { a := a + 10; } in { new int a0 := 5; call f(a0); print a0; };"),
              std::vector<std::string>{"5"});
}

TEST(Procedures, QuantumArgumentsAliased) {
    for (uint64_t seed = 0; seed < 16; seed++) {
        auto lines = run(R"(
proc entangle: a:qbit, b:qbit { a *= H; a, b *= CNot; } in {
    new qbit x := 0;
    new qbit y := 0;
    call entangle(x, y);
    measure x then { print 1; } else { print 0; };
    measure y then { print 1; } else { print 0; };
};
)",
                         seed);
        ASSERT_EQ(lines.size(), 2u);
        EXPECT_EQ(lines[0], lines[1]);
    }
}

TEST(Procedures, RecursionLimit) {
    auto p = testing_support::load_checked("proc f: a:int { call f(a); } in { call f(1); };");
    BufferOutput out;
    comm::RunOptions opts;
    opts.recursion_limit = 64;
    auto r = comm::run_all(p, opts, out);
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.error->code(), ErrorCode::E_RECURSION_LIMIT);
}

TEST(Print, Formats) {
    EXPECT_EQ(run("print \"Hello, world!\";"), std::vector<std::string>{"Hello, world!"});
    EXPECT_EQ(run("print 5+7;"), std::vector<std::string>{"12"});
    EXPECT_EQ(run("print 0.5;"), std::vector<std::string>{"0.5"});
}

TEST(Properties, DeterministicUnderSeed) {
    for (const std::string path : {"programs/teleport.qpl", "programs/epr.qpl", "programs/adaptive.qpl"}) {
        auto p = testing_support::load_checked(testing_support::read_file(path));
        for (uint64_t seed = 0; seed < 20; seed++) {
            std::vector<std::string> first, second;
            for (auto *lines : {&first, &second}) {
                BufferOutput out;
                comm::RunOptions opts;
                opts.seed = seed;
                opts.interleave = comm::Interleave::Random;
                ASSERT_TRUE(comm::run_all(p, opts, out).ok());
                *lines = out.lines;
            }
            EXPECT_EQ(first, second) << path << " seed " << seed;
        }
    }
}

TEST(Properties, ScopeRestoration) {
    EXPECT_EQ(run(R"(
new int x := 1;
new bit y := 1;
{ new float x := 2.5; print x; { new qbit y := 0; y *= H; }; print y; };
print x;
)"),
              (std::vector<std::string>{"2.5", "1", "1"}));
}

TEST(Properties, NoAliasedQuantumReferences) {
    std::mt19937_64 rng(0);
    for (const std::string path : {"programs/teleport.qpl", "programs/ft_dump.qpl", "programs/procedures.qpl"}) {
        auto p = testing_support::load_checked(testing_support::read_file(path));
        qcore::QuantumState state;
        StatePort quantum(state, rng);
        BufferOutput out;
        std::set<std::string> names;
        for (const auto &m : p.modules) {
            names.insert(m.name);
        }
        comm::ChannelSet channels(names);
        int checked = 0;
        auto r = comm::run_with_ports(
            p, {}, [&](const std::string &) { return Ports{&quantum, &channels, &out}; },
            [&](const std::vector<Machine> &machines) {
                for (const auto &m : machines) {
                    std::multiset<int> seen;
                    for (const auto &ref : m.owned_quantum()) {
                        seen.insert(ref.begin(), ref.end());
                    }
                    for (int i : seen) {
                        EXPECT_EQ(seen.count(i), 1u) << path;
                    }
                }
                checked++;
            });
        EXPECT_TRUE(r.ok()) << path;
        EXPECT_GT(checked, 0);
    }
}

}  // namespace
