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

#include <string_view>

#include "cqpl/kraus/explore.h"
#include "cqpl/syntax/ast.h"

namespace cqpl::kraus {

enum class EquivMode {
    /// Per-module traces equal after renaming positions by first appearance.
    Exact,
    /// Per-module traces equal up to commuting adjacent independent elements.
    Reorder,
    /// Whole-program paths induce the same map from the empty heap.
    Channel,
};

std::optional<EquivMode> equiv_mode_from_name(std::string_view name);

struct EquivOptions {
    EquivMode mode = EquivMode::Exact;
    /// Qbit budget for channel mode; larger programs raise E_TOO_LARGE.
    int max_qbits = 6;
    ExploreOptions explore;
    double tol = 1e-10;
};

bool programs_equiv(const syntax::Program &a, const syntax::Program &b, const EquivOptions &options = {});

/// Trace comparisons underlying the first two modes.
bool traces_equal_exact(const Aggregation &a, const Aggregation &b, double tol = 1e-12);
bool traces_equal_reorder(const Aggregation &a, const Aggregation &b, double tol = 1e-12);

/// Channel-mode comparison of two whole-program traces.
bool traces_equal_channel(const Aggregation &a, const Aggregation &b, int max_qbits, double tol = 1e-10);

}  // namespace cqpl::kraus
