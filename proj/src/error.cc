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

#include "cqpl/error.h"

namespace cqpl {

std::string_view code_name(ErrorCode code) {
    switch (code) {
#define CQPL_CODE(x) \
    case ErrorCode::x: \
        return #x;
        CQPL_CODE(E_LEX)
        CQPL_CODE(E_PARSE)
        CQPL_CODE(E_UNDECLARED)
        CQPL_CODE(E_REDECLARED)
        CQPL_CODE(E_TYPE_MISMATCH)
        CQPL_CODE(E_COND_NOT_BIT)
        CQPL_CODE(E_NOT_CLASSICAL)
        CQPL_CODE(E_NOT_QUANTUM)
        CQPL_CODE(E_DUP_TUPLE)
        CQPL_CODE(E_DIM_MISMATCH)
        CQPL_CODE(E_NOT_UNITARY)
        CQPL_CODE(E_MEASURE_WIDTH)
        CQPL_CODE(E_MEASURE_FLOAT)
        CQPL_CODE(E_USE_AFTER_SEND)
        CQPL_CODE(E_RECV_SHADOW)
        CQPL_CODE(E_UNKNOWN_MODULE)
        CQPL_CODE(E_SELF_SEND)
        CQPL_CODE(E_SEND_OUTSIDE_MODULE)
        CQPL_CODE(E_SEND_BORROWED)
        CQPL_CODE(E_BAD_INIT)
        CQPL_CODE(E_UNKNOWN_PROC)
        CQPL_CODE(E_ARITY)
        CQPL_CODE(E_ARG_TYPE)
        CQPL_CODE(E_BAD_PARAM)
        CQPL_CODE(E_HEAP_EXHAUSTED)
        CQPL_CODE(E_SIM_CAP)
        CQPL_CODE(E_DIV_ZERO)
        CQPL_CODE(E_RECURSION_LIMIT)
        CQPL_CODE(E_RECV_TYPE)
        CQPL_CODE(E_DEADLOCK)
        CQPL_CODE(E_STEP_LIMIT)
        CQPL_CODE(E_INTERNAL)
        CQPL_CODE(E_DIM)
        CQPL_CODE(E_NOT_HERMITIAN)
        CQPL_CODE(E_UNBOUNDED)
        CQPL_CODE(E_TOO_LARGE)
        CQPL_CODE(W_COMM_IMBALANCE)
#undef CQPL_CODE
    }
    return "E_UNKNOWN";
}

bool is_warning(ErrorCode code) {
    return code_name(code).starts_with("W_");
}

}  // namespace cqpl
