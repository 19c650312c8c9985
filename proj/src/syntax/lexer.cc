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

#include <array>
#include <cctype>

#include "cqpl/syntax/token.h"

namespace cqpl::syntax {

namespace {

constexpr std::array kKeywords = {
    "new",  "qbit",    "bit",    "int",  "float", "qint", "short", "qshort", "if",   "then",
    "else", "while",   "do",     "measure", "proc", "call", "in",    "module", "send", "to",
    "receive", "from", "print",  "dump", "skip",  "true", "false", "H",      "CNot", "Not",
    "Phase", "FT",
};

constexpr std::array kOperators = {
    ":=", "*=", "->", "<=", ">=", "==", "!=", "+", "-", "*", "/", "<", ">", "=", "&", "|", "!",
};

constexpr std::array kPunctuation = {"[[", "]]", ";", ",", ":", "(", ")", "{", "}"};

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool digit(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

class Lexer {
   public:
    explicit Lexer(std::string_view src) : src_(src) {
    }

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_trivia();
            if (at_end()) {
                break;
            }
            out.push_back(next_token());
        }
        return out;
    }

   private:
    bool at_end() const {
        return pos_ >= src_.size();
    }
    char peek(size_t ahead = 0) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }
    void advance() {
        if (src_[pos_] == '\n') {
            line_++;
            col_ = 1;
        } else {
            col_++;
        }
        pos_++;
    }
    [[noreturn]] void fail(int line, int col, const std::string &msg) const {
        throw Error(ErrorCode::E_LEX, msg, {line, col});
    }

    void skip_trivia() {
        while (!at_end()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
                advance();
            } else if (c == '/' && peek(1) == '/') {
                while (!at_end() && peek() != '\n') {
                    advance();
                }
            } else if (c == '/' && peek(1) == '*') {
                int line = line_, col = col_;
                advance();
                advance();
                while (!(peek() == '*' && peek(1) == '/')) {
                    if (at_end()) {
                        fail(line, col, "unterminated comment");
                    }
                    advance();
                }
                advance();
                advance();
            } else {
                return;
            }
        }
    }

    Token make(TokenKind kind, std::string lexeme, int line, int col) const {
        return Token{kind, std::move(lexeme), line, col};
    }

    Token next_token() {
        int line = line_, col = col_;
        char c = peek();
        if (ident_start(c)) {
            size_t start = pos_;
            while (ident_char(peek())) {
                advance();
            }
            std::string word(src_.substr(start, pos_ - start));
            auto kind = is_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier;
            return make(kind, std::move(word), line, col);
        }
        if (digit(c) || (c == '.' && digit(peek(1)))) {
            return number(line, col);
        }
        if (c == '"') {
            return string_literal(line, col);
        }
        std::string_view best;
        TokenKind kind = TokenKind::Operator;
        for (std::string_view op : kOperators) {
            if (op.size() > best.size() && src_.substr(pos_, op.size()) == op) {
                best = op;
                kind = TokenKind::Operator;
            }
        }
        for (std::string_view p : kPunctuation) {
            if (p.size() > best.size() && src_.substr(pos_, p.size()) == p) {
                best = p;
                kind = TokenKind::Punctuation;
            }
        }
        if (!best.empty()) {
            for (size_t i = 0; i < best.size(); i++) {
                advance();
            }
            return make(kind, std::string(best), line, col);
        }
        std::string shown = std::isprint(static_cast<unsigned char>(c)) ? std::string(1, c)
                                                                         : "\\x" + std::to_string(
                                                                                       static_cast<unsigned char>(c));
        fail(line, col, "unexpected character '" + shown + "'");
    }

    Token number(int line, int col) {
        size_t start = pos_;
        bool is_float = false;
        while (digit(peek())) {
            advance();
        }
        if (peek() == '.' && digit(peek(1))) {
            is_float = true;
            advance();
            while (digit(peek())) {
                advance();
            }
        } else if (peek() == '.' && !ident_start(peek(1))) {
            // "1." is a float literal
            is_float = true;
            advance();
        }
        if ((peek() == 'e' || peek() == 'E') &&
            (digit(peek(1)) || ((peek(1) == '+' || peek(1) == '-') && digit(peek(2))))) {
            is_float = true;
            advance();
            if (peek() == '+' || peek() == '-') {
                advance();
            }
            while (digit(peek())) {
                advance();
            }
        }
        TokenKind kind = is_float ? TokenKind::FloatLiteral : TokenKind::IntLiteral;
        if (peek() == 'i' && !ident_char(peek(1))) {
            advance();
            kind = TokenKind::ImaginaryLiteral;
        }
        if (ident_char(peek())) {
            while (ident_char(peek())) {
                advance();
            }
            fail(line, col,
                 "invalid token '" + std::string(src_.substr(start, pos_ - start)) +
                     "': identifiers must not start with a digit");
        }
        return make(kind, std::string(src_.substr(start, pos_ - start)), line, col);
    }

    Token string_literal(int line, int col) {
        advance();
        std::string body;
        while (true) {
            if (at_end() || peek() == '\n') {
                fail(line, col, "unterminated string literal");
            }
            char c = peek();
            if (c == '"') {
                advance();
                break;
            }
            if (c == '\\') {
                advance();
                if (at_end()) {
                    fail(line, col, "unterminated string literal");
                }
                char e = peek();
                switch (e) {
                    case 'n':
                        body += '\n';
                        break;
                    case 't':
                        body += '\t';
                        break;
                    case '"':
                    case '\\':
                        body += e;
                        break;
                    default:
                        fail(line_, col_, std::string("unknown escape '\\") + e + "'");
                }
                advance();
                continue;
            }
            body += c;
            advance();
        }
        return make(TokenKind::StringLiteral, std::move(body), line, col);
    }

    std::string_view src_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

}  // namespace

std::string_view token_kind_name(TokenKind kind) {
    switch (kind) {
        case TokenKind::Keyword:
            return "keyword";
        case TokenKind::Identifier:
            return "identifier";
        case TokenKind::IntLiteral:
            return "int-literal";
        case TokenKind::FloatLiteral:
            return "float-literal";
        case TokenKind::ImaginaryLiteral:
            return "imaginary-literal";
        case TokenKind::StringLiteral:
            return "string-literal";
        case TokenKind::Operator:
            return "operator";
        case TokenKind::Punctuation:
            return "punctuation";
        case TokenKind::EndOfFile:
            return "end of file";
    }
    return "?";
}

bool is_keyword(std::string_view word) {
    for (std::string_view k : kKeywords) {
        if (k == word) {
            return true;
        }
    }
    return false;
}

std::vector<Token> tokenize(std::string_view source) {
    return Lexer(source).run();
}

}  // namespace cqpl::syntax
