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

#include <optional>

#include "cqpl/syntax/ast.h"
#include "cqpl/types/checker.h"

namespace cqpl::types {

struct BalanceResult {
    enum class Verdict { Balanced, Unknown, Imbalanced };

    Verdict verdict = Verdict::Unknown;
    /// W_COMM_IMBALANCE warning when imbalanced.
    std::optional<Diagnostic> diagnostic;
};

/// Static send/receive matching for modular programs.
///
/// Each module body is reduced to its sequence of sends and receives. Loops
/// and conditionals with constant conditions are unrolled; those whose
/// condition is not constant are allowed only if they contain no
/// communication. The sequences are then replayed against typed FIFOs: a
/// receive that can never be served, a type mismatch, or items left in a
/// channel make the program imbalanced. Anything not reducible is Unknown.
BalanceResult comm_balance_check(const syntax::Program &program);

}  // namespace cqpl::types
