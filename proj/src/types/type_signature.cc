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

#include "cqpl/types/type_signature.h"

namespace cqpl::types {

TypeSignature signature_of(VarType t) {
    switch (t) {
        case VarType::Bit:
            return TypeSignature::bit();
        case VarType::Qbit:
            return TypeSignature::qbits(1);
        case VarType::Short:
            return {Kind::Classical, 8, false};
        case VarType::Qshort:
            return TypeSignature::qbits(8);
        case VarType::Int:
            return TypeSignature::integer();
        case VarType::Qint:
            return TypeSignature::qbits(16);
        case VarType::Float:
            return TypeSignature::floating();
    }
    return TypeSignature::void_type();
}

std::string_view type_name(VarType t) {
    switch (t) {
        case VarType::Bit:
            return "bit";
        case VarType::Qbit:
            return "qbit";
        case VarType::Short:
            return "short";
        case VarType::Qshort:
            return "qshort";
        case VarType::Int:
            return "int";
        case VarType::Qint:
            return "qint";
        case VarType::Float:
            return "float";
    }
    return "?";
}

std::optional<VarType> var_type_from_name(std::string_view name) {
    for (auto t : {VarType::Bit, VarType::Qbit, VarType::Short, VarType::Qshort, VarType::Int, VarType::Qint,
                   VarType::Float}) {
        if (type_name(t) == name) {
            return t;
        }
    }
    return std::nullopt;
}

std::string to_string(const TypeSignature &sig) {
    if (sig.width == 0) {
        return "void";
    }
    for (auto t : {VarType::Bit, VarType::Qbit, VarType::Short, VarType::Qshort, VarType::Int, VarType::Qint,
                   VarType::Float}) {
        if (signature_of(t) == sig) {
            return std::string(type_name(t));
        }
    }
    return std::string("(") + (sig.kind == Kind::Quantum ? "quantum" : "classical") + "," +
           std::to_string(sig.width) + ")";
}

bool type_equiv(const TypeSignature &a, const TypeSignature &b) {
    return a.kind == b.kind && a.width == b.width && a.is_float == b.is_float;
}

}  // namespace cqpl::types
