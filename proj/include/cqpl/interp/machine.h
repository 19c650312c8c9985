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

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cqpl/error.h"
#include "cqpl/interp/ports.h"
#include "cqpl/interp/value.h"
#include "cqpl/syntax/ast.h"

namespace cqpl::interp {

struct ExecStatus {
    enum class State { Running, BlockedOnReceive, Finished, Failed };

    State state = State::Running;
    /// Source module awaited while blocked.
    std::string channel;
    std::optional<Error> error;

    bool done() const {
        return state == State::Finished || state == State::Failed;
    }
};

struct MachineConfig {
    int recursion_limit = 4096;
};

struct Ports {
    QuantumPort *quantum = nullptr;
    ChannelPort *channels = nullptr;
    OutputPort *output = nullptr;
};

/// Evaluates a side-effect free expression against a lookup function.
/// Integer division truncates toward zero; division by zero raises E_DIV_ZERO.
ClassicalValue eval_expr(const syntax::Expr &e,
                         const std::function<ClassicalValue(const std::string &, SourcePos)> &lookup);

/// Resumable interpreter for one module (or a whole plain program).
///
/// step() executes one statement. A receive with too few queued items leaves
/// the machine BlockedOnReceive; the next step() retries it.
///
/// Output follows a line discipline: `print` starts a new line, `dump` appends
/// its spectrum to the pending print line (or starts its own) and ends it.
class Machine {
   public:
    Machine(std::string name, const syntax::StmtList &body, Ports ports, MachineConfig config = {});
    ~Machine();
    Machine(Machine &&) noexcept;
    Machine &operator=(Machine &&) noexcept;

    const std::string &name() const {
        return name_;
    }
    const ExecStatus &status() const {
        return status_;
    }

    ExecStatus step();
    /// Steps until the machine blocks, finishes or fails.
    ExecStatus run();

    /// Position of the statement or loop test executed last.
    SourcePos last_pos() const;

    /// Heap indices held by owned (non-borrowed) quantum bindings, one list per binding.
    std::vector<std::vector<int>> owned_quantum() const;

   private:
    struct Impl;
    std::string name_;
    ExecStatus status_;
    std::unique_ptr<Impl> impl_;
};

}  // namespace cqpl::interp
