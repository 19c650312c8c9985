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
#include <string>

#include "cqpl/kraus/aggregation.h"
#include "cqpl/syntax/ast.h"

namespace cqpl::kraus {

struct ExploreOptions {
    /// Completed paths before giving up with E_TOO_LARGE.
    int max_leaves = 4096;
    /// Statements per path before giving up with E_UNBOUNDED.
    uint64_t max_steps = 100000;
    int recursion_limit = 4096;
    /// Qbits tracked by the whole-program simulator.
    int sim_cap = 20;
    /// Largest measurement fan-out, in qbits.
    int max_measure_width = 10;
};

/// Trace of one module run on its own. Every measurement outcome is a
/// branch; quantum receives yield fresh positions and classical receives
/// branch over their domain (bit, short). Receiving an int or float raises
/// E_UNBOUNDED. `body` is the module body, or the statements of a plain
/// program under the name "main".
Aggregation explore_module(const std::string &name, const syntax::StmtList &body, const ExploreOptions &options);

/// Trace of all modules under the round-robin scheduler. Elements carry
/// their module; outcomes of probability zero are pruned and deadlocks or
/// runtime failures end a path in Abort.
Aggregation explore_global(const syntax::Program &program, const ExploreOptions &options);

}  // namespace cqpl::kraus
