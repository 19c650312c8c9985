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
#include <string>
#include <vector>

#include "cqpl/kraus/aggregation.h"
#include "cqpl/kraus/explore.h"
#include "cqpl/syntax/ast.h"

namespace cqpl::kraus {

struct ModuleSemantics {
    std::string name;
    Aggregation trace;
};

/// Per-module traces in declaration order. A plain program yields a single
/// module named "main". Throws E_UNBOUNDED or E_TOO_LARGE.
std::vector<ModuleSemantics> extract_semantics(const syntax::Program &program, const ExploreOptions &options = {});

/// One trace for the whole program, modules interleaved as scheduled.
Aggregation extract_global(const syntax::Program &program, const ExploreOptions &options = {});

/// Output text of each path (lines joined by '\n') mapped to its total
/// probability, computed by applying the trace to |0...0>. Aborted paths are
/// keyed by their output followed by "\n<abort CODE>".
std::map<std::string, double> predict_outputs(const Aggregation &global);

}  // namespace cqpl::kraus
