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

#include <random>
#include <sstream>

#include "../support/test_support.h"
#include "cqpl/comm/scheduler.h"
#include "cqpl/types/checker.h"
#include "cqpl/types/comm_balance.h"

namespace {

using namespace cqpl;
using namespace cqpl::types;

CheckResult check(const std::string &src) {
    auto p = syntax::parse_source(src);
    return check_program(p);
}

TEST(CheckProgram, CoinTossAccepted) {
    EXPECT_TRUE(check(testing_support::read_file("tests/programs/listings/cointoss_listing.qpl")).ok());
}

TEST(CheckProgram, DuplicateTuple) {
    auto r = check("new qbit q := 0; q,q *= CNot;");
    EXPECT_TRUE(r.has(ErrorCode::E_DUP_TUPLE));
}

TEST(CheckProgram, UseAfterSend) {
    auto r = check("module A { new qbit q := 0; send q to B; q *= H; }; module B { receive q:qbit from A; };");
    EXPECT_TRUE(r.has(ErrorCode::E_USE_AFTER_SEND));
    ASSERT_FALSE(r.diagnostics.empty());
    EXPECT_EQ(r.diagnostics[0].pos.line, 1);
}

TEST(CheckProgram, AnnotatesExpressions) {
    auto p = syntax::parse_source("new int a := 3; new float f := 0.5; print a + 1; print f * 2;");
    ASSERT_TRUE(check_program(p).ok());
    const auto &pr = std::get<syntax::stmt::Print>(p.statements[2]->node);
    const auto &e = std::get<syntax::ExprPtr>(pr.what);
    ASSERT_TRUE(e->type.has_value());
    EXPECT_EQ(*e->type, TypeSignature::integer());
    const auto &pf = std::get<syntax::stmt::Print>(p.statements[3]->node);
    EXPECT_TRUE(std::get<syntax::ExprPtr>(pf.what)->type->is_float);
}

TEST(CheckProgram, ContinuesPastIndependentErrors) {
    auto r = check("new qbit a := 0; a, a *= CNot; a *= CNot;");
    EXPECT_TRUE(r.has(ErrorCode::E_DUP_TUPLE));
    EXPECT_TRUE(r.has(ErrorCode::E_DIM_MISMATCH));
}

TypingContext context_with(std::initializer_list<std::pair<std::string, VarType>> vars) {
    TypingContext ctx;
    for (const auto &[name, t] : vars) {
        TypingContext::Entry e;
        e.type = t;
        e.sig = signature_of(t);
        ctx.declare(name, e);
    }
    return ctx;
}

TEST(GateApply, Judgments) {
    auto ctx = context_with({{"q1", VarType::Qbit}, {"q2", VarType::Qbit}, {"c", VarType::Bit}});
    EXPECT_FALSE(check_gate_apply({"q1", "q2"}, syntax::gate::FT{2}, ctx).has_value());
    auto dim = check_gate_apply({"q1"}, syntax::gate::CNot{}, ctx);
    ASSERT_TRUE(dim.has_value());
    EXPECT_EQ(dim->code, ErrorCode::E_DIM_MISMATCH);
    auto nu = check_gate_apply({"q1"}, syntax::gate::Matrix{{1, 0, 0, 0.999}}, ctx);
    ASSERT_TRUE(nu.has_value());
    EXPECT_EQ(nu->code, ErrorCode::E_NOT_UNITARY);
    auto nq = check_gate_apply({"c"}, syntax::gate::H{}, ctx);
    ASSERT_TRUE(nq.has_value());
    EXPECT_EQ(nq->code, ErrorCode::E_NOT_QUANTUM);
    auto dup = check_gate_apply({"q1", "q1"}, syntax::gate::CNot{}, ctx);
    ASSERT_TRUE(dup.has_value());
    EXPECT_EQ(dup->code, ErrorCode::E_DUP_TUPLE);
}

TEST(Measure, Widths) {
    auto ctx = context_with({{"b", VarType::Bit},
                             {"i", VarType::Int},
                             {"f", VarType::Float},
                             {"q", VarType::Qbit},
                             {"qi", VarType::Qint}});
    EXPECT_FALSE(check_measure("b", "q", ctx).has_value());
    auto w = check_measure("i", "q", ctx);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->code, ErrorCode::E_MEASURE_WIDTH);
    EXPECT_FALSE(check_measure("i", "qi", ctx).has_value());
    auto f = check_measure("f", "q", ctx);
    ASSERT_TRUE(f.has_value());
    EXPECT_EQ(f->code, ErrorCode::E_MEASURE_FLOAT);
}

TEST(SendReceive, Judgments) {
    EXPECT_TRUE(check("module Alice { new qbit q1 := 0; new qbit q2 := 1; send q1,q2 to Bob; };"
                      "module Bob { receive a:qbit, b:qbit from Alice; };")
                    .ok());
    EXPECT_TRUE(check(testing_support::read_file("tests/programs/negative/recv_shadow.qpl"))
                    .has(ErrorCode::E_RECV_SHADOW));
    EXPECT_TRUE(check("module A { new qbit q := 0; send q to NoSuchModule; }; module B { skip; };")
                    .has(ErrorCode::E_UNKNOWN_MODULE));
    EXPECT_TRUE(check("module A { new qbit q := 0; send q to A; }; module B { skip; };")
                    .has(ErrorCode::E_SELF_SEND));
    EXPECT_TRUE(check("module A { new qbit q := 0; send q,q to B; }; module B { receive a:qbit, b:qbit from A; };")
                    .has(ErrorCode::E_DUP_TUPLE));
}

TEST(TypeEquiv, Examples) {
    EXPECT_TRUE(type_equiv(signature_of(VarType::Qshort), TypeSignature::qbits(8)));
    EXPECT_FALSE(type_equiv(signature_of(VarType::Bit), signature_of(VarType::Qbit)));
    EXPECT_TRUE(type_equiv(TypeSignature::void_type(), TypeSignature::void_type()));
    EXPECT_FALSE(type_equiv(signature_of(VarType::Qint), signature_of(VarType::Qshort)));
}

TEST(TypeEquiv, IsEquivalenceRelation) {
    std::vector<TypeSignature> all = {TypeSignature::void_type(), TypeSignature::bit(), TypeSignature::integer(),
                                      TypeSignature::floating()};
    for (int w = 1; w <= 16; w *= 2) {
        all.push_back(TypeSignature::qbits(w));
    }
    for (auto t : {VarType::Bit, VarType::Qbit, VarType::Short, VarType::Qshort, VarType::Int, VarType::Qint}) {
        all.push_back(signature_of(t));
    }
    for (const auto &a : all) {
        EXPECT_TRUE(type_equiv(a, a));
        for (const auto &b : all) {
            EXPECT_EQ(type_equiv(a, b), type_equiv(b, a));
            for (const auto &c : all) {
                if (type_equiv(a, b) && type_equiv(b, c)) {
                    EXPECT_TRUE(type_equiv(a, c));
                }
            }
        }
    }
}

BalanceResult balance(const std::string &src) {
    auto p = syntax::parse_source(src);
    EXPECT_TRUE(check_program(p).ok()) << src;
    return comm_balance_check(p);
}

TEST(CommBalance, Examples) {
    auto dead = balance(testing_support::read_file("programs/deadlock.qpl"));
    EXPECT_EQ(dead.verdict, BalanceResult::Verdict::Imbalanced);
    ASSERT_TRUE(dead.diagnostic.has_value());
    EXPECT_EQ(dead.diagnostic->code, ErrorCode::W_COMM_IMBALANCE);
    EXPECT_EQ(dead.diagnostic->severity, Severity::Warning);

    EXPECT_EQ(balance(testing_support::read_file("programs/epr.qpl")).verdict, BalanceResult::Verdict::Balanced);
    EXPECT_EQ(balance(testing_support::read_file("programs/teleport.qpl")).verdict,
              BalanceResult::Verdict::Balanced);

    auto loop = balance(R"(
module A {
    new qbit c := 0;
    c *= H;
    new int n := 0;
    new qint r := 0;
    n := measure r;
    while (n >= 0) do {
        new qbit q := 0;
        send q to B;
        n := n - 1;
    };
};
module B {
    receive q:qbit from A;
};
)");
    EXPECT_EQ(loop.verdict, BalanceResult::Verdict::Unknown);
}

TEST(CommBalance, ConstantLoopsUnrolled) {
    auto ok = balance(R"(
module A {
    new int i := 0;
    while (i < 3) do {
        new qbit q := 0;
        send q to B;
        i := i + 1;
    };
};
module B {
    new int j := 0;
    while (j < 3) do {
        receive q:qbit from A;
        j := j + 1;
    };
};
)");
    EXPECT_EQ(ok.verdict, BalanceResult::Verdict::Balanced);
    auto short_by_one = balance(R"(
module A {
    new int i := 0;
    while (i < 3) do {
        new qbit q := 0;
        send q to B;
        i := i + 1;
    };
};
module B {
    new int j := 0;
    while (j < 2) do {
        receive q:qbit from A;
        j := j + 1;
    };
};
)");
    EXPECT_EQ(short_by_one.verdict, BalanceResult::Verdict::Imbalanced);
}

TEST(Overshading, OuterBindingRestored) {
    auto p = testing_support::load_checked("new int x := 1; { new qbit x := 0; x *= H; }; print x;");
    interp::BufferOutput out;
    ASSERT_TRUE(comm::run_all(p, {}, out).ok());
    EXPECT_EQ(out.lines, std::vector<std::string>{"1"});
}

TEST(NegativeCorpus, EachJudgmentHasAMinimalProgram) {
    const std::vector<std::pair<std::string, ErrorCode>> cases = {
        {"dup_tuple", ErrorCode::E_DUP_TUPLE},         {"dim_mismatch", ErrorCode::E_DIM_MISMATCH},
        {"measure_width", ErrorCode::E_MEASURE_WIDTH}, {"use_after_send", ErrorCode::E_USE_AFTER_SEND},
        {"recv_shadow", ErrorCode::E_RECV_SHADOW},     {"not_unitary", ErrorCode::E_NOT_UNITARY},
        {"cond_not_bit", ErrorCode::E_COND_NOT_BIT},
    };
    for (const auto &[name, code] : cases) {
        auto r = check(testing_support::read_file("tests/programs/negative/" + name + ".qpl"));
        ASSERT_EQ(r.diagnostics.size(), 1u) << name;
        EXPECT_EQ(r.diagnostics[0].code, code) << name;
    }
}

// Random single-module programs: whatever the checker accepts must not fail at
// runtime for cloning, dimension, width or ownership causes.
std::string random_program(std::mt19937_64 &rng) {
    std::ostringstream s;
    std::vector<std::pair<std::string, std::string>> vars;
    const std::vector<std::string> types = {"qbit", "qbit", "qshort", "bit", "int", "short"};
    std::uniform_int_distribution<int> len(3, 10), any(0, 1 << 20);
    const int n = len(rng);
    int fresh = 0, width = 0;
    auto pick = [&](const std::string &want) -> std::string {
        std::vector<std::string> c;
        for (const auto &[name, t] : vars) {
            if (want.empty() || t == want) {
                c.push_back(name);
            }
        }
        if (c.empty()) {
            return "v0";
        }
        return c[static_cast<size_t>(any(rng)) % c.size()];
    };
    for (int i = 0; i < n; i++) {
        switch (any(rng) % 7) {
            case 0:
            case 1: {
                std::string t = types[static_cast<size_t>(any(rng)) % types.size()];
                const int w = t == "qshort" ? 8 : t == "qbit" ? 1 : 0;
                if (width + w > 20) {
                    t = "bit";
                } else {
                    width += w;
                }
                std::string name = "v" + std::to_string(fresh++);
                s << "new " << t << " " << name << " := " << (any(rng) % 2) << ";\n";
                vars.push_back({name, t});
                break;
            }
            case 2:
                s << pick("") << " *= " << (any(rng) % 2 ? "H" : "Not") << ";\n";
                break;
            case 3:
                s << pick("") << ", " << pick("") << " *= CNot;\n";
                break;
            case 4:
                s << pick(any(rng) % 2 ? "bit" : "int") << " := measure " << pick("") << ";\n";
                break;
            case 5:
                s << "measure " << pick("qbit") << " then { print 1; } else { print 0; };\n";
                break;
            default:
                s << pick("qshort") << " *= FT(" << 1 + any(rng) % 8 << ");\n";
                break;
        }
    }
    return s.str();
}

TEST(JudgmentSoundness, AcceptedProgramsRunCleanly) {
    std::mt19937_64 rng(5);
    int accepted = 0, attempts = 0;
    while (accepted < 1000 && attempts < 200000) {
        attempts++;
        std::string src = random_program(rng);
        auto p = syntax::parse_source(src);
        if (!check_program(p).ok()) {
            continue;
        }
        accepted++;
        interp::BufferOutput out;
        comm::RunOptions opts;
        opts.seed = static_cast<uint64_t>(attempts);
        auto r = comm::run_all(p, opts, out);
        EXPECT_TRUE(r.ok()) << src << "\n" << (r.error ? r.error->what() : "");
    }
    EXPECT_EQ(accepted, 1000);
}

}  // namespace
