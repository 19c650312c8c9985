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

#include "cqpl/syntax/parser.h"

#include <charconv>
#include <cmath>
#include <set>

namespace cqpl::syntax {

namespace {

std::string join(const std::vector<std::string> &items) {
    std::string out;
    for (size_t i = 0; i < items.size(); i++) {
        if (i > 0) {
            out += i + 1 == items.size() ? " or " : ", ";
        }
        out += items[i];
    }
    return out;
}

std::string describe(const Token &t) {
    if (t.kind == TokenKind::EndOfFile) {
        return "end of file";
    }
    if (t.kind == TokenKind::StringLiteral) {
        return "string \"" + t.lexeme + "\"";
    }
    return "'" + t.lexeme + "'";
}

double parse_double(const Token &t) {
    std::string text = t.lexeme;
    if (!text.empty() && text.back() == 'i') {
        text.pop_back();
    }
    try {
        return std::stod(text);
    } catch (const std::exception &) {
        throw ParseError(t.pos(), {"number"}, describe(t));
    }
}

int64_t parse_int(const Token &t) {
    int64_t value = 0;
    auto [ptr, ec] = std::from_chars(t.lexeme.data(), t.lexeme.data() + t.lexeme.size(), value);
    if (ec != std::errc() || ptr != t.lexeme.data() + t.lexeme.size()) {
        throw ParseError(t.pos(), {"integer literal in 64-bit range"}, describe(t));
    }
    return value;
}

bool is_power_of_two(size_t n) {
    return n != 0 && (n & (n - 1)) == 0;
}

class Parser {
   public:
    explicit Parser(std::span<const Token> tokens) : tokens_(tokens) {
        SourcePos end{1, 1};
        if (!tokens.empty()) {
            const Token &last = tokens.back();
            end = {last.line, last.column + static_cast<int>(last.lexeme.size())};
        }
        eof_ = Token{TokenKind::EndOfFile, "", end.line, end.column};
    }

    Program program() {
        Program prog;
        if (at_end()) {
            return prog;
        }
        if (peek().is(TokenKind::Keyword, "module")) {
            std::set<std::string> names;
            while (!at_end()) {
                ModuleDef def = module_def();
                if (!names.insert(def.name).second) {
                    throw ParseError(def.pos, {"distinct module name"}, "duplicate module '" + def.name + "'");
                }
                expect_punct(";");
                prog.modules.push_back(std::move(def));
            }
        } else {
            while (!at_end()) {
                prog.statements.push_back(statement());
                expect_punct(";");
            }
        }
        return prog;
    }

    std::vector<std::complex<double>> number_list() {
        std::vector<std::complex<double>> out;
        out.push_back(complex_entry());
        while (accept_punct(",")) {
            out.push_back(complex_entry());
        }
        if (!at_end()) {
            fail({"','"});
        }
        return out;
    }

   private:
    // --- token helpers -------------------------------------------------------

    const Token &peek(size_t ahead = 0) const {
        return pos_ + ahead < tokens_.size() ? tokens_[pos_ + ahead] : eof_;
    }
    bool at_end() const {
        return pos_ >= tokens_.size();
    }
    const Token &advance() {
        const Token &t = peek();
        if (!at_end()) {
            pos_++;
        }
        return t;
    }
    [[noreturn]] void fail(std::vector<std::string> expected) const {
        throw ParseError(peek().pos(), std::move(expected), describe(peek()));
    }
    bool check_punct(std::string_view p) const {
        return peek().is(TokenKind::Punctuation, p);
    }
    bool check_op(std::string_view op) const {
        return peek().is(TokenKind::Operator, op);
    }
    bool check_kw(std::string_view kw) const {
        return peek().is(TokenKind::Keyword, kw);
    }
    bool accept_punct(std::string_view p) {
        if (check_punct(p)) {
            advance();
            return true;
        }
        return false;
    }
    bool accept_op(std::string_view op) {
        if (check_op(op)) {
            advance();
            return true;
        }
        return false;
    }
    bool accept_kw(std::string_view kw) {
        if (check_kw(kw)) {
            advance();
            return true;
        }
        return false;
    }
    void expect_punct(std::string_view p) {
        if (!accept_punct(p)) {
            fail({"'" + std::string(p) + "'"});
        }
    }
    void expect_op(std::string_view op) {
        if (!accept_op(op)) {
            fail({"'" + std::string(op) + "'"});
        }
    }
    void expect_kw(std::string_view kw) {
        if (!accept_kw(kw)) {
            fail({"'" + std::string(kw) + "'"});
        }
    }
    std::string identifier() {
        if (peek().kind != TokenKind::Identifier) {
            fail({"identifier"});
        }
        return advance().lexeme;
    }

    // --- modules and statements ---------------------------------------------

    ModuleDef module_def() {
        SourcePos pos = peek().pos();
        expect_kw("module");
        ModuleDef def;
        def.pos = pos;
        def.name = identifier();
        def.body = block_body();
        return def;
    }

    StmtList block_body() {
        expect_punct("{");
        StmtList body;
        while (!check_punct("}")) {
            if (at_end()) {
                fail({"'}'"});
            }
            body.push_back(statement());
            expect_punct(";");
        }
        advance();
        return body;
    }

    StmtPtr statement() {
        const Token &t = peek();
        SourcePos pos = t.pos();
        if (t.kind == TokenKind::Keyword) {
            const std::string &kw = t.lexeme;
            if (kw == "new") {
                return allocate();
            }
            if (kw == "if") {
                return if_stmt();
            }
            if (kw == "while") {
                advance();
                ExprPtr cond = expression();
                expect_kw("do");
                StmtPtr body = statement();
                return make_stmt(stmt::While{std::move(cond), std::move(body)}, pos);
            }
            if (kw == "measure") {
                advance();
                std::string q = identifier();
                expect_kw("then");
                StmtPtr then_branch = statement();
                expect_kw("else");
                StmtPtr else_branch = statement();
                return make_stmt(stmt::MeasureBranch{std::move(q), std::move(then_branch), std::move(else_branch)},
                                 pos);
            }
            if (kw == "proc") {
                return proc_decl();
            }
            if (kw == "call") {
                return proc_call(std::nullopt, pos);
            }
            if (kw == "send") {
                advance();
                std::vector<std::string> vars = var_list();
                expect_kw("to");
                std::string dest = identifier();
                return make_stmt(stmt::Send{std::move(vars), std::move(dest)}, pos);
            }
            if (kw == "receive") {
                advance();
                std::vector<Binding> ctx = context(true);
                expect_kw("from");
                std::string source = identifier();
                return make_stmt(stmt::Receive{std::move(ctx), std::move(source)}, pos);
            }
            if (kw == "print") {
                advance();
                if (peek().kind == TokenKind::StringLiteral) {
                    return make_stmt(stmt::Print{advance().lexeme}, pos);
                }
                return make_stmt(stmt::Print{expression()}, pos);
            }
            if (kw == "dump") {
                advance();
                return make_stmt(stmt::Dump{var_list()}, pos);
            }
            if (kw == "skip") {
                advance();
                return make_stmt(stmt::Skip{}, pos);
            }
        }
        if (check_punct("{")) {
            return make_stmt(stmt::Block{block_body()}, pos);
        }
        if (check_punct("(")) {
            advance();
            std::vector<std::string> results = var_list();
            expect_punct(")");
            expect_op(":=");
            return proc_call(std::move(results), pos);
        }
        if (t.kind == TokenKind::Identifier) {
            if (peek(1).is(TokenKind::Operator, ":=")) {
                std::string name = advance().lexeme;
                advance();
                if (accept_kw("measure")) {
                    std::string source = identifier();
                    return make_stmt(stmt::AssignMeasure{std::move(name), std::move(source)}, pos);
                }
                return make_stmt(stmt::Assign{std::move(name), expression()}, pos);
            }
            std::vector<std::string> vars = var_list();
            expect_op("*=");
            return make_stmt(stmt::GateApply{std::move(vars), gate()}, pos);
        }
        fail({"statement"});
    }

    StmtPtr allocate() {
        SourcePos pos = advance().pos();
        VarType type = var_type();
        std::string name = identifier();
        expect_op(":=");
        return make_stmt(stmt::Allocate{type, std::move(name), expression()}, pos);
    }

    StmtPtr if_stmt() {
        SourcePos pos = advance().pos();
        ExprPtr cond = expression();
        expect_kw("then");
        StmtPtr then_branch = statement();
        StmtPtr else_branch;
        if (accept_kw("else")) {
            else_branch = statement();
        }
        return make_stmt(stmt::If{std::move(cond), std::move(then_branch), std::move(else_branch)}, pos);
    }

    StmtPtr proc_decl() {
        SourcePos pos = advance().pos();
        stmt::ProcDecl decl;
        decl.name = identifier();
        expect_punct(":");
        decl.params = context(false);
        if (accept_op("->")) {
            SourcePos ret_pos = peek().pos();
            decl.returns = context(false);
            std::vector<const Binding *> classical;
            for (const auto &p : decl.params) {
                if (types::signature_of(p.type).classical()) {
                    classical.push_back(&p);
                }
            }
            bool same = classical.size() == decl.returns->size();
            for (size_t i = 0; same && i < classical.size(); i++) {
                same = classical[i]->name == (*decl.returns)[i].name && classical[i]->type == (*decl.returns)[i].type;
            }
            if (!same) {
                throw ParseError(ret_pos, {"return context equal to the classical parameters"},
                                 "a different return context");
            }
        }
        decl.body = block_body();
        expect_kw("in");
        decl.in = statement();
        return make_stmt(std::move(decl), pos);
    }

    StmtPtr proc_call(std::optional<std::vector<std::string>> results, SourcePos pos) {
        expect_kw("call");
        stmt::ProcCall call;
        call.results = std::move(results);
        call.name = identifier();
        expect_punct("(");
        if (!check_punct(")")) {
            call.args.push_back(expression());
            while (accept_punct(",")) {
                call.args.push_back(expression());
            }
        }
        expect_punct(")");
        return make_stmt(std::move(call), pos);
    }

    VarType var_type() {
        if (peek().kind == TokenKind::Keyword) {
            if (auto t = types::var_type_from_name(peek().lexeme)) {
                advance();
                return *t;
            }
        }
        fail({"bit", "qbit", "short", "qshort", "int", "qint", "float"});
    }

    std::vector<Binding> context(bool nonempty) {
        std::vector<Binding> ctx;
        if (!nonempty && peek().kind != TokenKind::Identifier) {
            return ctx;
        }
        do {
            SourcePos pos = peek().pos();
            std::string name = identifier();
            expect_punct(":");
            ctx.push_back(Binding{std::move(name), var_type(), pos});
        } while (accept_punct(","));
        return ctx;
    }

    std::vector<std::string> var_list() {
        std::vector<std::string> vars;
        vars.push_back(identifier());
        while (accept_punct(",")) {
            vars.push_back(identifier());
        }
        return vars;
    }

    Gate gate() {
        const Token &t = peek();
        if (accept_kw("H")) {
            return gate::H{};
        }
        if (accept_kw("Not")) {
            return gate::Not{};
        }
        if (accept_kw("CNot")) {
            return gate::CNot{};
        }
        if (accept_kw("Phase")) {
            return gate::Phase{unary()};
        }
        if (accept_kw("FT")) {
            expect_punct("(");
            if (peek().kind != TokenKind::IntLiteral) {
                fail({"int-literal"});
            }
            int64_t n = parse_int(advance());
            expect_punct(")");
            return gate::FT{n};
        }
        if (check_punct("[[")) {
            SourcePos open = advance().pos();
            size_t start = pos_;
            while (!check_punct("]]")) {
                if (at_end()) {
                    fail({"']]'"});
                }
                advance();
            }
            std::vector<std::complex<double>> entries =
                Parser(tokens_.subspan(start, pos_ - start)).number_list_at(peek().pos());
            advance();
            size_t side = static_cast<size_t>(std::llround(std::sqrt(static_cast<double>(entries.size()))));
            if (side * side != entries.size() || !is_power_of_two(side)) {
                throw ParseError(open, {"matrix literal with 4^k entries"},
                                 std::to_string(entries.size()) + " entries");
            }
            return gate::Matrix{std::move(entries)};
        }
        (void)t;
        fail({"H", "CNot", "Not", "Phase", "FT", "'[['"});
    }

   public:
    std::vector<std::complex<double>> number_list_at(SourcePos close) {
        if (tokens_.empty()) {
            throw ParseError(close, {"number"}, "']]'");
        }
        eof_ = Token{TokenKind::Punctuation, "]]", close.line, close.column};
        return number_list();
    }

   private:
    int sign() {
        if (accept_op("-")) {
            return -1;
        }
        accept_op("+");
        return 1;
    }

    std::complex<double> complex_entry() {
        double s = sign();
        const Token &t = peek();
        if (t.kind == TokenKind::ImaginaryLiteral) {
            advance();
            return {0.0, s * parse_double(t)};
        }
        if (t.kind != TokenKind::IntLiteral && t.kind != TokenKind::FloatLiteral) {
            fail({"number"});
        }
        advance();
        double re = s * parse_double(t);
        if (check_op("+") || check_op("-")) {
            double joiner = advance().lexeme == "-" ? -1.0 : 1.0;
            double s2 = sign();
            if (peek().kind != TokenKind::ImaginaryLiteral) {
                fail({"imaginary-literal"});
            }
            return {re, joiner * s2 * parse_double(advance())};
        }
        return {re, 0.0};
    }

    // --- expressions --------------------------------------------------------

    ExprPtr expression() {
        return or_expr();
    }

    ExprPtr or_expr() {
        ExprPtr lhs = and_expr();
        while (check_op("|")) {
            SourcePos pos = advance().pos();
            lhs = make_expr(Binary{BinaryOp::Or, std::move(lhs), and_expr()}, pos);
        }
        return lhs;
    }

    ExprPtr and_expr() {
        ExprPtr lhs = comparison();
        while (check_op("&")) {
            SourcePos pos = advance().pos();
            lhs = make_expr(Binary{BinaryOp::And, std::move(lhs), comparison()}, pos);
        }
        return lhs;
    }

    std::optional<BinaryOp> comparison_op() const {
        if (peek().kind != TokenKind::Operator) {
            return std::nullopt;
        }
        const std::string &op = peek().lexeme;
        if (op == "<") return BinaryOp::Lt;
        if (op == ">") return BinaryOp::Gt;
        if (op == "<=") return BinaryOp::Le;
        if (op == ">=") return BinaryOp::Ge;
        if (op == "==" || op == "=") return BinaryOp::Eq;
        if (op == "!=") return BinaryOp::Ne;
        return std::nullopt;
    }

    ExprPtr comparison() {
        ExprPtr lhs = additive();
        while (auto op = comparison_op()) {
            SourcePos pos = advance().pos();
            lhs = make_expr(Binary{*op, std::move(lhs), additive()}, pos);
        }
        return lhs;
    }

    ExprPtr additive() {
        ExprPtr lhs = multiplicative();
        while (check_op("+") || check_op("-")) {
            const Token &t = advance();
            BinaryOp op = t.lexeme == "+" ? BinaryOp::Add : BinaryOp::Sub;
            lhs = make_expr(Binary{op, std::move(lhs), multiplicative()}, t.pos());
        }
        return lhs;
    }

    ExprPtr multiplicative() {
        ExprPtr lhs = unary();
        while (check_op("*") || check_op("/")) {
            const Token &t = advance();
            BinaryOp op = t.lexeme == "*" ? BinaryOp::Mul : BinaryOp::Div;
            lhs = make_expr(Binary{op, std::move(lhs), unary()}, t.pos());
        }
        return lhs;
    }

    ExprPtr unary() {
        if (check_op("-") || check_op("!")) {
            const Token &t = advance();
            UnaryOp op = t.lexeme == "-" ? UnaryOp::Neg : UnaryOp::Not;
            return make_expr(Unary{op, unary()}, t.pos());
        }
        return primary();
    }

    ExprPtr primary() {
        const Token &t = peek();
        switch (t.kind) {
            case TokenKind::IntLiteral:
                advance();
                return make_expr(IntLit{parse_int(t)}, t.pos());
            case TokenKind::FloatLiteral:
                advance();
                return make_expr(FloatLit{parse_double(t)}, t.pos());
            case TokenKind::Identifier:
                advance();
                return make_expr(VarRef{t.lexeme}, t.pos());
            case TokenKind::Keyword:
                if (t.lexeme == "true" || t.lexeme == "false") {
                    advance();
                    return make_expr(BoolLit{t.lexeme == "true"}, t.pos());
                }
                break;
            case TokenKind::Punctuation:
                if (t.lexeme == "(") {
                    advance();
                    ExprPtr inner = expression();
                    expect_punct(")");
                    return make_expr(Paren{std::move(inner)}, t.pos());
                }
                break;
            default:
                break;
        }
        fail({"expression"});
    }

    std::span<const Token> tokens_;
    size_t pos_ = 0;
    Token eof_;
};

}  // namespace

ParseError::ParseError(SourcePos pos, std::vector<std::string> expected, std::string found)
    : Error(ErrorCode::E_PARSE, "expected " + join(expected) + "; found " + found, pos),
      expected_(std::move(expected)),
      found_(std::move(found)) {
}

Program parse(std::span<const Token> tokens) {
    return Parser(tokens).program();
}

Program parse_source(std::string_view source) {
    std::vector<Token> tokens = tokenize(source);
    return parse(tokens);
}

std::vector<std::complex<double>> parse_matrix_literal(std::span<const Token> tokens) {
    if (tokens.empty()) {
        throw ParseError({1, 1}, {"number"}, "end of file");
    }
    return Parser(tokens).number_list();
}

const ModuleDef *Program::find_module(std::string_view name) const {
    for (const auto &m : modules) {
        if (m.name == name) {
            return &m;
        }
    }
    return nullptr;
}

}  // namespace cqpl::syntax
