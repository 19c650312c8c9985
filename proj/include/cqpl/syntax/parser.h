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

#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cqpl/syntax/ast.h"
#include "cqpl/syntax/token.h"

namespace cqpl::syntax {

/// Raised for the first syntax error; carries what was expected and what was found.
class ParseError : public Error {
   public:
    ParseError(SourcePos pos, std::vector<std::string> expected, std::string found);

    const std::vector<std::string> &expected() const {
        return expected_;
    }
    const std::string &found() const {
        return found_;
    }

   private:
    std::vector<std::string> expected_;
    std::string found_;
};

Program parse(std::span<const Token> tokens);

/// Convenience: tokenize + parse.
Program parse_source(std::string_view source);

/// Parses the inside of a `[[ ... ]]` literal (without the brackets).
/// Accepts `a`, `bi`, `a + bi` (and `a - bi`) entries, each with an optional sign.
std::vector<std::complex<double>> parse_matrix_literal(std::span<const Token> tokens);

}  // namespace cqpl::syntax
