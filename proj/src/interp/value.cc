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

#include "cqpl/interp/value.h"

#include <cmath>

#include "cqpl/error.h"
#include "cqpl/qcore/format.h"

namespace cqpl::interp {

int64_t ClassicalValue::as_int() const {
    return kind_ == Kind::Float ? static_cast<int64_t>(std::trunc(f_)) : i_;
}

double ClassicalValue::as_double() const {
    return kind_ == Kind::Float ? f_ : static_cast<double>(i_);
}

bool ClassicalValue::truthy() const {
    return kind_ == Kind::Float ? f_ != 0.0 : i_ != 0;
}

ClassicalValue ClassicalValue::coerce_to(types::VarType t) const {
    using types::VarType;
    switch (t) {
        case VarType::Bit:
            if (kind_ == Kind::Float || (i_ != 0 && i_ != 1)) {
                throw Error(ErrorCode::E_TYPE_MISMATCH, "value " + to_string() + " does not fit in a bit");
            }
            return bit(i_ != 0);
        case VarType::Short:
        case VarType::Int:
            if (kind_ == Kind::Float) {
                throw Error(ErrorCode::E_TYPE_MISMATCH, "float value cannot be stored in an integer");
            }
            return integer(i_);
        case VarType::Float:
            return floating(as_double());
        default:
            throw Error(ErrorCode::E_NOT_CLASSICAL, "classical value assigned to a quantum type");
    }
}

std::string ClassicalValue::to_string() const {
    if (kind_ == Kind::Float) {
        return qcore::format_number(f_);
    }
    return std::to_string(i_);
}

types::TypeSignature ClassicalValue::signature() const {
    switch (kind_) {
        case Kind::Bit:
            return types::TypeSignature::bit();
        case Kind::Int:
            return types::TypeSignature::integer();
        case Kind::Float:
            return types::TypeSignature::floating();
    }
    return types::TypeSignature::void_type();
}

}  // namespace cqpl::interp
