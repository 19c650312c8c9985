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

#include "cqpl/syntax/ast.h"

namespace cqpl::syntax {

/// Renders source text that parses back to the same tree. Parentheses are
/// emitted only where the tree shape requires them.
std::string pretty_print(const Program &program);
std::string pretty_print(const Stmt &stmt, int indent = 0);
std::string pretty_print(const Expr &expr);
std::string pretty_print(const Gate &gate);

}  // namespace cqpl::syntax
