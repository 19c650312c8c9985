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

#include <string>
#include <string_view>
#include <vector>

#include "cqpl/error.h"

namespace cqpl::syntax {

enum class TokenKind {
    Keyword,
    Identifier,
    IntLiteral,
    FloatLiteral,
    ImaginaryLiteral,
    StringLiteral,
    Operator,
    Punctuation,
    EndOfFile,
};

struct Token {
    TokenKind kind;
    /// Source text. For string literals this is the unquoted, unescaped body.
    std::string lexeme;
    int line = 1;
    int column = 1;

    SourcePos pos() const {
        return {line, column};
    }
    bool is(TokenKind k, std::string_view text) const {
        return kind == k && lexeme == text;
    }
    bool operator==(const Token &) const = default;
};

std::string_view token_kind_name(TokenKind kind);

/// Reserved words. Identifiers may not use these.
bool is_keyword(std::string_view word);

/// Splits source text into tokens. Comments (`/* */` and `//`) and whitespace
/// are dropped. The returned stream is not terminated by an EndOfFile token;
/// the parser supplies its own end marker.
std::vector<Token> tokenize(std::string_view source);

}  // namespace cqpl::syntax
