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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cqpl/error.h"
#include "cqpl/syntax/ast.h"
#include "cqpl/types/type_signature.h"

namespace cqpl::types {

enum class Severity { Error, Warning };

struct Diagnostic {
    Severity severity = Severity::Error;
    SourcePos pos;
    ErrorCode code = ErrorCode::E_INTERNAL;
    std::string message;

    /// "file:line:col: error[CODE]: message"
    std::string format(std::string_view file) const;
};

Diagnostic make_diagnostic(ErrorCode code, SourcePos pos, std::string message);

/// Scoped map from identifiers to signatures, with ownership flags for
/// quantum variables. Lookups resolve the innermost scope first.
class TypingContext {
   public:
    struct Entry {
        VarType type = VarType::Bit;
        TypeSignature sig;
        bool sent_away = false;
        /// Quantum procedure parameter: usable, but owned by the caller.
        bool borrowed = false;
        /// Non-null for procedure names.
        const syntax::stmt::ProcDecl *proc = nullptr;
    };

    TypingContext();

    void push(bool loop_body = false);
    void pop();

    Entry *lookup(const std::string &name);
    const Entry *lookup(const std::string &name) const;
    /// Index of the scope that binds `name`, or -1.
    int scope_of(const std::string &name) const;
    bool in_current_scope(const std::string &name) const;
    /// Returns false if `name` already exists in the current scope.
    bool declare(const std::string &name, Entry entry);
    /// Unconditionally replaces a binding in the current scope.
    void redeclare(const std::string &name, Entry entry);
    /// Index of the innermost loop-body scope, or -1.
    int loop_floor() const;
    int depth() const {
        return static_cast<int>(scopes_.size());
    }
    /// Procedures visible from the current scope.
    std::map<std::string, Entry> visible_procs() const;

    /// Module being checked; empty for programs without modules.
    std::string module;
    std::set<std::string> modules;

   private:
    struct Scope {
        std::map<std::string, Entry> names;
        bool loop_body = false;
    };
    std::vector<Scope> scopes_;
};

struct CheckResult {
    std::vector<Diagnostic> diagnostics;

    bool ok() const;
    bool has(ErrorCode code) const;
};

/// Checks every judgment, annotating expressions with their signatures.
/// Independent errors are all reported; each module gets a fresh context.
CheckResult check_program(syntax::Program &program);

std::optional<Diagnostic> check_gate_apply(const std::vector<std::string> &vars, const syntax::Gate &gate,
                                           TypingContext &ctx, SourcePos pos = {});
std::optional<Diagnostic> check_measure(const std::string &target, const std::string &source, TypingContext &ctx,
                                        SourcePos pos = {});
/// Checks a Send or Receive statement and applies its effect on `ctx`
/// (sent variables are flagged, received ones declared).
std::optional<Diagnostic> check_send_receive(const syntax::Stmt &stmt, TypingContext &ctx);

/// Whether a value of type `value` can be stored in a variable of type
/// `target`. `literal` is the integer literal value of the expression, if any.
bool assignable(VarType target, const TypeSignature &value, std::optional<int64_t> literal = std::nullopt);

}  // namespace cqpl::types
