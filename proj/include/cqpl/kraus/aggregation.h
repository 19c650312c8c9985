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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cqpl/error.h"
#include "cqpl/kraus/kraus_set.h"

namespace cqpl::kraus {

struct Element;
/// Elements apply left to right. A BranchSum, when present, is always the
/// last element: each branch carries the rest of its path.
using Aggregation = std::vector<Element>;

namespace element {

/// Fresh qbits at `positions`, reset to the basis state `bits` (first
/// position = most significant bit).
struct Create {
    std::vector<int> positions;
    uint64_t bits;
};
struct Gate {
    std::string label;
    Matrix matrix;
    std::vector<int> positions;
};
/// Projector onto |value> on `positions`; opens a measurement branch.
struct Project {
    uint64_t value;
    std::vector<int> positions;
};
/// Scope exit of a quantum variable (partial trace).
struct Discard {
    std::vector<int> positions;
};
/// {S}: quantum positions and classical values handed to `peer`.
struct Send {
    std::string peer;
    std::vector<int> positions;
    std::vector<std::string> values;
};
/// {R}: quantum positions and classical values taken from `peer`.
struct Receive {
    std::string peer;
    std::vector<int> positions;
    std::vector<std::string> values;
};
/// A completed output line; not part of the quantum denotation.
struct Output {
    std::string text;
};

struct Branch;
struct BranchSum {
    enum class Kind { Measure, Receive };
    /// "#k", unique within one trace.
    std::string id;
    Kind kind = Kind::Measure;
    /// Measured positions, or the receiving peer for classical receives.
    std::vector<int> positions;
    std::string peer;
    std::vector<Branch> branches;
};
struct Branch {
    uint64_t value;
    Aggregation body;
};
/// The path ends in a runtime failure or deadlock.
struct Abort {
    ErrorCode code;
    std::string message;
};

}  // namespace element

struct Element {
    using Node = std::variant<element::Create, element::Gate, element::Project, element::Discard, element::Send,
                              element::Receive, element::Output, element::BranchSum, element::Abort>;
    Node node;
    /// Emitting module, set in whole-program traces.
    std::string module;
};

/// "p(#k=v)"
std::string branch_tag(const element::BranchSum &sum, const element::Branch &branch);

/// One past the largest position mentioned anywhere in the aggregation.
int wire_count(const Aggregation &agg);

/// One complete path through the branch sums.
struct Leaf {
    /// tr of the unnormalised final state: the path probability.
    double probability = 0.0;
    /// (branch sum id, chosen value) along the path.
    std::vector<std::pair<std::string, uint64_t>> path;
    std::vector<std::string> outputs;
    std::optional<ErrorCode> abort;
    /// Unnormalised final density matrix over all wires.
    Matrix state;
};

/// Runs the aggregation on |0...0> over `wires` wires and returns every leaf.
std::vector<Leaf> leaves(const Aggregation &agg, int wires);

/// Sum over all paths of the unnormalised final states, starting from rho.
Matrix apply(const Aggregation &agg, const Matrix &rho, int wires);

/// Kraus set of a single element on `wires` wires. Output, placeholders and
/// discards are the identity; BranchSum is not a single set (E_INTERNAL).
KrausSet element_set(const Element &e, int wires);

/// Kraus set of the straight-line prefix of `agg` up to its BranchSum,
/// contracted into normal form.
KrausSet contract_prefix(const Aggregation &agg, int wires);

}  // namespace cqpl::kraus
