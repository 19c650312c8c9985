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

#include <stdexcept>
#include <string>
#include <string_view>

namespace cqpl {

struct SourcePos {
    int line = 0;
    int column = 0;

    bool operator==(const SourcePos &) const = default;
    bool valid() const {
        return line > 0;
    }
};

/// Every diagnostic and runtime failure is reported under one of these codes.
/// Codes starting with W_ are warnings; everything else is an error.
enum class ErrorCode {
    // lexical and syntactic
    E_LEX,
    E_PARSE,
    // static semantics
    E_UNDECLARED,
    E_REDECLARED,
    E_TYPE_MISMATCH,
    E_COND_NOT_BIT,
    E_NOT_CLASSICAL,
    E_NOT_QUANTUM,
    E_DUP_TUPLE,
    E_DIM_MISMATCH,
    E_NOT_UNITARY,
    E_MEASURE_WIDTH,
    E_MEASURE_FLOAT,
    E_USE_AFTER_SEND,
    E_RECV_SHADOW,
    E_UNKNOWN_MODULE,
    E_SELF_SEND,
    E_SEND_OUTSIDE_MODULE,
    E_SEND_BORROWED,
    E_BAD_INIT,
    E_UNKNOWN_PROC,
    E_ARITY,
    E_ARG_TYPE,
    E_BAD_PARAM,
    // runtime
    E_HEAP_EXHAUSTED,
    E_SIM_CAP,
    E_DIV_ZERO,
    E_RECURSION_LIMIT,
    E_RECV_TYPE,
    E_DEADLOCK,
    E_STEP_LIMIT,
    E_INTERNAL,
    // semantics engine
    E_DIM,
    E_NOT_HERMITIAN,
    E_UNBOUNDED,
    E_TOO_LARGE,
    // warnings
    W_COMM_IMBALANCE,
};

std::string_view code_name(ErrorCode code);
bool is_warning(ErrorCode code);

/// Exception carrying a diagnostic code and, where known, the source position.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string message, SourcePos pos = {})
        : std::runtime_error(std::move(message)), code_(code), pos_(pos) {
    }

    ErrorCode code() const {
        return code_;
    }
    SourcePos pos() const {
        return pos_;
    }

   private:
    ErrorCode code_;
    SourcePos pos_;
};

}  // namespace cqpl
