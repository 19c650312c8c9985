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

#include "cqpl/types/type_signature.h"

namespace cqpl::interp {

/// Runtime classical value. Booleans are bits.
class ClassicalValue {
   public:
    enum class Kind { Bit, Int, Float };

    static ClassicalValue bit(bool b) {
        return ClassicalValue(Kind::Bit, b ? 1 : 0, 0.0);
    }
    static ClassicalValue integer(int64_t v) {
        return ClassicalValue(Kind::Int, v, 0.0);
    }
    static ClassicalValue floating(double v) {
        return ClassicalValue(Kind::Float, 0, v);
    }

    ClassicalValue() = default;

    Kind kind() const {
        return kind_;
    }
    bool is_float() const {
        return kind_ == Kind::Float;
    }
    int64_t as_int() const;
    double as_double() const;
    bool truthy() const;

    /// Converts to the representation of a declared variable type.
    ClassicalValue coerce_to(types::VarType t) const;

    std::string to_string() const;
    types::TypeSignature signature() const;

    bool operator==(const ClassicalValue &o) const {
        return kind_ == o.kind_ && i_ == o.i_ && f_ == o.f_;
    }

   private:
    ClassicalValue(Kind k, int64_t i, double f) : kind_(k), i_(i), f_(f) {
    }

    Kind kind_ = Kind::Bit;
    int64_t i_ = 0;
    double f_ = 0.0;
};

}  // namespace cqpl::interp
