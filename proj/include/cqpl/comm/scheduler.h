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

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cqpl/comm/channel.h"
#include "cqpl/interp/machine.h"
#include "cqpl/syntax/ast.h"

namespace cqpl::comm {

enum class Interleave { RoundRobin, Random };

struct RunOptions {
    uint64_t seed = 0;
    int qheap = qcore::QuantumState::kDefaultHeap;
    int sim_cap = qcore::QuantumState::kDefaultSimCap;
    Interleave interleave = Interleave::RoundRobin;
    int recursion_limit = 4096;
    /// Total statement budget across modules; 0 means unlimited.
    uint64_t max_steps = 0;
    /// Verify after every step that each allocated qbit has exactly one owner.
    bool check_ownership = true;
    /// When set, each executed step is logged as "[Module] line:col".
    std::ostream *trace = nullptr;
};

/// Name used for the single machine of a program without modules.
inline constexpr const char *kMainModule = "main";

struct ModuleResult {
    std::string name;
    interp::ExecStatus status;
};

struct RunResult {
    std::vector<ModuleResult> modules;
    /// First runtime failure, deadlock or step-limit error.
    std::optional<Error> error;
    /// Module that raised `error`, empty for deadlocks.
    std::string failed_module;
    uint64_t steps = 0;

    bool ok() const {
        return !error.has_value();
    }
};

/// Writes each completed line to a stream, optionally as "[Module] text".
class StreamOutput : public interp::OutputPort {
   public:
    StreamOutput(std::ostream &os, bool prefix) : os_(os), prefix_(prefix) {
    }
    void line(const std::string &module, const std::string &text) override {
        if (prefix_) {
            os_ << "[" << module << "] ";
        }
        os_ << text << '\n';
    }

   private:
    std::ostream &os_;
    bool prefix_;
};

/// Runs every module to completion under a cooperative scheduler that steps
/// one statement per turn. Raises nothing; failures land in RunResult.
RunResult run_all(const syntax::Program &program, const RunOptions &options, interp::OutputPort &output);

using PortFactory = std::function<interp::Ports(const std::string &module)>;
using StepHook = std::function<void(const std::vector<interp::Machine> &)>;

/// Same scheduling policy against caller-provided ports, one set per module.
/// `after_step` runs after every step that made progress; an Error it throws
/// ends the run.
RunResult run_with_ports(const syntax::Program &program, const RunOptions &options, const PortFactory &ports,
                         const StepHook &after_step = {});

}  // namespace cqpl::comm
