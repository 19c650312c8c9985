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
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cqpl/interp/value.h"
#include "cqpl/qcore/gates.h"
#include "cqpl/qcore/quantum_state.h"
#include "cqpl/types/type_signature.h"

namespace cqpl::interp {

/// A unitary as issued by a gate statement. `label` names the source gate
/// ("H", "CNot", "Phase(0.5)", "FT(2)", "Matrix").
struct GateOp {
    std::string label;
    qcore::Matrix matrix;
};

/// Access to the shared quantum heap. Targets are heap indices.
class QuantumPort {
   public:
    virtual ~QuantumPort() = default;
    virtual std::vector<int> alloc(int n, uint64_t pattern) = 0;
    virtual void apply(const GateOp &op, std::span<const int> targets) = 0;
    virtual uint64_t measure(std::span<const int> targets) = 0;
    virtual std::vector<qcore::SpectrumEntry> spectrum(std::span<const int> targets) = 0;
    /// Scope exit of an owned quantum variable. `module_exit` is set for the
    /// variables still alive when the module body ends.
    virtual void release(std::span<const int> targets, bool module_exit) = 0;
};

/// One transferred variable. Quantum payloads carry heap indices.
struct Item {
    types::TypeSignature type;
    std::variant<ClassicalValue, std::vector<int>> payload;

    bool quantum() const {
        return std::holds_alternative<std::vector<int>>(payload);
    }
};

class ChannelPort {
   public:
    virtual ~ChannelPort() = default;
    virtual void send(const std::string &from, const std::string &to, std::vector<Item> items) = 0;
    /// Removes `expected.size()` items from the from->to channel, or returns
    /// nullopt when fewer are queued. Throws E_RECV_TYPE on a type mismatch.
    virtual std::optional<std::vector<Item>> try_receive(const std::string &from, const std::string &to,
                                                         std::span<const types::TypeSignature> expected) = 0;
};

class OutputPort {
   public:
    virtual ~OutputPort() = default;
    virtual void line(const std::string &module, const std::string &text) = 0;
    /// Raw spectrum of each dump, before formatting.
    virtual void dump(const std::string & /*module*/, std::span<const qcore::SpectrumEntry> /*entries*/,
                      int /*width*/) {
    }
};

/// Runs directly against a QuantumState with a seeded generator.
class StatePort : public QuantumPort {
   public:
    StatePort(qcore::QuantumState &state, std::mt19937_64 &rng) : state_(state), rng_(rng) {
    }
    std::vector<int> alloc(int n, uint64_t pattern) override {
        return state_.alloc(n, pattern);
    }
    void apply(const GateOp &op, std::span<const int> targets) override {
        state_.apply(op.matrix, targets);
    }
    uint64_t measure(std::span<const int> targets) override {
        return state_.measure(targets, rng_);
    }
    std::vector<qcore::SpectrumEntry> spectrum(std::span<const int> targets) override {
        return state_.spectrum(targets);
    }
    void release(std::span<const int> targets, bool /*module_exit*/) override {
        state_.release(targets, rng_);
    }

   private:
    qcore::QuantumState &state_;
    std::mt19937_64 &rng_;
};

/// Collects lines in order, optionally prefixed with "[Module] ".
class BufferOutput : public OutputPort {
   public:
    explicit BufferOutput(bool prefix = false) : prefix_(prefix) {
    }
    void line(const std::string &module, const std::string &text) override {
        lines.push_back(prefix_ && !module.empty() ? "[" + module + "] " + text : text);
    }
    void dump(const std::string &module, std::span<const qcore::SpectrumEntry> entries, int width) override {
        dumps.push_back({module, {entries.begin(), entries.end()}, width});
    }

    struct Dump {
        std::string module;
        std::vector<qcore::SpectrumEntry> entries;
        int width;
    };
    std::vector<std::string> lines;
    std::vector<Dump> dumps;

   private:
    bool prefix_;
};

}  // namespace cqpl::interp
