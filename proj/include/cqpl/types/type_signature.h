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
#include <string>
#include <string_view>

namespace cqpl::types {

enum class Kind { Classical, Quantum };

/// Source-level type names. `short`/`qshort` are accepted aliases for 8-bit data.
enum class VarType { Bit, Qbit, Short, Qshort, Int, Qint, Float };

/// Kind plus width. Widths count bits (classical) or qbits (quantum);
/// float is classical, 64 bits wide and not a valid measurement target.
struct TypeSignature {
    Kind kind = Kind::Classical;
    int width = 0;
    bool is_float = false;

    static constexpr TypeSignature void_type() {
        return {Kind::Classical, 0, false};
    }
    static constexpr TypeSignature bit() {
        return {Kind::Classical, 1, false};
    }
    static constexpr TypeSignature integer() {
        return {Kind::Classical, 16, false};
    }
    static constexpr TypeSignature floating() {
        return {Kind::Classical, 64, true};
    }
    static constexpr TypeSignature qbits(int n) {
        return {Kind::Quantum, n, false};
    }

    /// q(σ): purely quantum and non-empty.
    bool quantum() const {
        return kind == Kind::Quantum && width > 0;
    }
    /// c(σ): purely classical.
    bool classical() const {
        return kind == Kind::Classical;
    }
    bool is_bit() const {
        return classical() && !is_float && width == 1;
    }
    bool numeric() const {
        return classical() && width > 0;
    }

    bool operator==(const TypeSignature &) const = default;
};

TypeSignature signature_of(VarType t);
std::string_view type_name(VarType t);
std::optional<VarType> var_type_from_name(std::string_view name);

/// Mnemonic for a signature when one exists ("qint"), else "(quantum,3)".
std::string to_string(const TypeSignature &sig);

/// Signatures are equivalent iff kinds agree and widths agree. Floats only
/// match floats.
bool type_equiv(const TypeSignature &a, const TypeSignature &b);

}  // namespace cqpl::types
