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

#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cqpl/error.h"
#include "cqpl/types/type_signature.h"

namespace cqpl::syntax {

using types::VarType;

enum class BinaryOp { Add, Sub, Mul, Div, Lt, Gt, Le, Ge, Eq, Ne, And, Or };
enum class UnaryOp { Neg, Not };

std::string_view op_text(BinaryOp op);
std::string_view op_text(UnaryOp op);

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct IntLit {
    int64_t value;
};
struct FloatLit {
    double value;
};
struct BoolLit {
    bool value;
};
struct VarRef {
    std::string name;
};
struct Paren {
    ExprPtr inner;
};
struct Binary {
    BinaryOp op;
    ExprPtr lhs;
    ExprPtr rhs;
};
struct Unary {
    UnaryOp op;
    ExprPtr operand;
};

struct Expr {
    std::variant<IntLit, FloatLit, BoolLit, VarRef, Paren, Binary, Unary> node;
    SourcePos pos;
    /// Filled in by the type checker.
    std::optional<types::TypeSignature> type;
};

template <typename T>
ExprPtr make_expr(T node, SourcePos pos = {}) {
    return std::make_unique<Expr>(Expr{std::move(node), pos, std::nullopt});
}

namespace gate {
struct H {};
struct Not {};
struct CNot {};
struct Phase {
    ExprPtr shift;
};
struct FT {
    int64_t n;
};
/// Row-major entries of a user supplied unitary.
struct Matrix {
    std::vector<std::complex<double>> entries;
};
}  // namespace gate

using Gate = std::variant<gate::H, gate::Not, gate::CNot, gate::Phase, gate::FT, gate::Matrix>;

struct Binding {
    std::string name;
    VarType type;
    SourcePos pos;
};

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;
using StmtList = std::vector<StmtPtr>;

namespace stmt {
struct Allocate {
    VarType type;
    std::string name;
    ExprPtr init;
};
struct Assign {
    std::string name;
    ExprPtr value;
};
struct AssignMeasure {
    std::string target;
    std::string source;
};
struct MeasureBranch {
    std::string qvar;
    StmtPtr then_branch;
    StmtPtr else_branch;
};
struct If {
    ExprPtr cond;
    StmtPtr then_branch;
    StmtPtr else_branch;  // may be null
};
struct While {
    ExprPtr cond;
    StmtPtr body;
};
struct GateApply {
    std::vector<std::string> vars;
    Gate gate;
};
struct Send {
    std::vector<std::string> vars;
    std::string dest;
};
struct Receive {
    std::vector<Binding> bindings;
    std::string source;
};
struct ProcDecl {
    std::string name;
    std::vector<Binding> params;
    /// Explicit `-> context`, when written.
    std::optional<std::vector<Binding>> returns;
    StmtList body;
    StmtPtr in;
};
struct ProcCall {
    /// `(a, b) := call f(...)` result names, when written.
    std::optional<std::vector<std::string>> results;
    std::string name;
    std::vector<ExprPtr> args;
};
struct Print {
    std::variant<std::string, ExprPtr> what;
};
struct Dump {
    std::vector<std::string> vars;
};
struct Skip {};
struct Block {
    StmtList body;
};
}  // namespace stmt

struct Stmt {
    std::variant<stmt::Allocate, stmt::Assign, stmt::AssignMeasure, stmt::MeasureBranch, stmt::If, stmt::While,
                 stmt::GateApply, stmt::Send, stmt::Receive, stmt::ProcDecl, stmt::ProcCall, stmt::Print, stmt::Dump,
                 stmt::Skip, stmt::Block>
        node;
    SourcePos pos;
};

template <typename T>
StmtPtr make_stmt(T node, SourcePos pos = {}) {
    return std::make_unique<Stmt>(Stmt{std::move(node), pos});
}

struct ModuleDef {
    std::string name;
    StmtList body;
    SourcePos pos;
};

/// Either a plain statement list or a list of modules, never both.
struct Program {
    StmtList statements;
    std::vector<ModuleDef> modules;

    bool is_modular() const {
        return !modules.empty();
    }
    const ModuleDef *find_module(std::string_view name) const;
};

/// Structural equality, ignoring positions and type annotations.
bool same_structure(const Expr &a, const Expr &b);
bool same_structure(const Stmt &a, const Stmt &b);
bool same_structure(const Program &a, const Program &b);

}  // namespace cqpl::syntax
