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

#include <string>
#include <vector>

#include "cqpl/kraus/aggregation.h"
#include "cqpl/kraus/semantics.h"

namespace cqpl::kraus {

/// Line-oriented rendering, two spaces of indent per nesting level:
///
///   module Alice:
///     Create(|00>)@0,1
///     Gate(H)@0
///     BranchSum #1 measure@0
///       p(#1=0):
///         Project(|0>)@0
///         Output("a is |0>")
///
/// Whole-program traces start with "program:" and prefix every element with
/// its module in brackets.
std::string format_text(const std::vector<ModuleSemantics> &modules);
std::string format_text_global(const Aggregation &trace);

/// JSON rendering; the schema is documented in README.md.
std::string format_json(const std::vector<ModuleSemantics> &modules);
std::string format_json_global(const Aggregation &trace);

/// One element on one line, without indentation or module prefix. Branch
/// sums render as their header only.
std::string element_text(const Element &e);

}  // namespace cqpl::kraus
