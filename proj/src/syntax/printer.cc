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

#include "cqpl/syntax/printer.h"

#include <charconv>
#include <cmath>

namespace cqpl::syntax {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

int precedence(BinaryOp op) {
    switch (op) {
        case BinaryOp::Or:
            return 1;
        case BinaryOp::And:
            return 2;
        case BinaryOp::Lt:
        case BinaryOp::Gt:
        case BinaryOp::Le:
        case BinaryOp::Ge:
        case BinaryOp::Eq:
        case BinaryOp::Ne:
            return 3;
        case BinaryOp::Add:
        case BinaryOp::Sub:
            return 4;
        case BinaryOp::Mul:
        case BinaryOp::Div:
            return 5;
    }
    return 0;
}

constexpr int kUnaryPrec = 6;

int precedence(const Expr &e) {
    if (auto *b = std::get_if<Binary>(&e.node)) {
        return precedence(b->op);
    }
    if (std::holds_alternative<Unary>(e.node)) {
        return kUnaryPrec;
    }
    if (auto *i = std::get_if<IntLit>(&e.node); i && i->value < 0) {
        return kUnaryPrec;
    }
    if (auto *f = std::get_if<FloatLit>(&e.node); f && std::signbit(f->value)) {
        return kUnaryPrec;
    }
    return 7;
}

std::string real_text(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string float_text(double v) {
    std::string s = real_text(v);
    if (s.find_first_of(".e") == std::string::npos) {
        s += ".0";
    }
    return s;
}

std::string quote(const std::string &s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '\n':
                out += "\\n";
                break;
            case '\t':
                out += "\\t";
                break;
            case '"':
                out += "\\\"";
                break;
            case '\\':
                out += "\\\\";
                break;
            default:
                out += c;
        }
    }
    return out + "\"";
}

void print_expr(const Expr &e, std::string &out);

void print_operand(const Expr &e, int min_prec, std::string &out) {
    if (precedence(e) < min_prec) {
        out += '(';
        print_expr(e, out);
        out += ')';
    } else {
        print_expr(e, out);
    }
}

void print_expr(const Expr &e, std::string &out) {
    std::visit(overloaded{
                   [&](const IntLit &n) { out += std::to_string(n.value); },
                   [&](const FloatLit &n) { out += float_text(n.value); },
                   [&](const BoolLit &n) { out += n.value ? "true" : "false"; },
                   [&](const VarRef &n) { out += n.name; },
                   [&](const Paren &n) {
                       out += '(';
                       print_expr(*n.inner, out);
                       out += ')';
                   },
                   [&](const Binary &n) {
                       int p = precedence(n.op);
                       print_operand(*n.lhs, p, out);
                       out += ' ';
                       out += op_text(n.op);
                       out += ' ';
                       print_operand(*n.rhs, p + 1, out);
                   },
                   [&](const Unary &n) {
                       out += op_text(n.op);
                       print_operand(*n.operand, kUnaryPrec, out);
                   },
               },
               e.node);
}

std::string complex_text(std::complex<double> z) {
    if (z.imag() == 0.0) {
        return real_text(z.real());
    }
    if (z.real() == 0.0) {
        return real_text(z.imag()) + "i";
    }
    std::string out = real_text(z.real());
    out += z.imag() < 0 ? " - " : " + ";
    out += real_text(std::abs(z.imag())) + "i";
    return out;
}

std::string join_names(const std::vector<std::string> &names) {
    std::string out;
    for (size_t i = 0; i < names.size(); i++) {
        out += (i ? ", " : "") + names[i];
    }
    return out;
}

std::string context_text(const std::vector<Binding> &ctx) {
    std::string out;
    for (size_t i = 0; i < ctx.size(); i++) {
        out += (i ? ", " : "") + ctx[i].name + ":" + std::string(types::type_name(ctx[i].type));
    }
    return out;
}

class StmtPrinter {
   public:
    explicit StmtPrinter(std::string &out) : out_(out) {
    }

    void list(const StmtList &stmts, int indent) {
        for (const auto &s : stmts) {
            pad(indent);
            stmt(*s, indent);
            out_ += ";\n";
        }
    }

    void block(const StmtList &stmts, int indent) {
        out_ += "{\n";
        list(stmts, indent + 1);
        pad(indent);
        out_ += "}";
    }

    void stmt(const Stmt &s, int indent) {
        std::visit(overloaded{
                       [&](const stmt::Allocate &n) {
                           out_ += "new " + std::string(types::type_name(n.type)) + " " + n.name + " := ";
                           print_expr(*n.init, out_);
                       },
                       [&](const stmt::Assign &n) {
                           out_ += n.name + " := ";
                           print_expr(*n.value, out_);
                       },
                       [&](const stmt::AssignMeasure &n) { out_ += n.target + " := measure " + n.source; },
                       [&](const stmt::MeasureBranch &n) {
                           out_ += "measure " + n.qvar + " then ";
                           stmt(*n.then_branch, indent);
                           out_ += " else ";
                           stmt(*n.else_branch, indent);
                       },
                       [&](const stmt::If &n) {
                           out_ += "if ";
                           print_expr(*n.cond, out_);
                           out_ += " then ";
                           stmt(*n.then_branch, indent);
                           if (n.else_branch) {
                               out_ += " else ";
                               stmt(*n.else_branch, indent);
                           }
                       },
                       [&](const stmt::While &n) {
                           out_ += "while ";
                           print_expr(*n.cond, out_);
                           out_ += " do ";
                           stmt(*n.body, indent);
                       },
                       [&](const stmt::GateApply &n) { out_ += join_names(n.vars) + " *= " + pretty_print(n.gate); },
                       [&](const stmt::Send &n) { out_ += "send " + join_names(n.vars) + " to " + n.dest; },
                       [&](const stmt::Receive &n) {
                           out_ += "receive " + context_text(n.bindings) + " from " + n.source;
                       },
                       [&](const stmt::ProcDecl &n) {
                           out_ += "proc " + n.name + ": " + context_text(n.params);
                           if (n.returns) {
                               out_ += " -> " + context_text(*n.returns);
                           }
                           out_ += " ";
                           block(n.body, indent);
                           out_ += " in ";
                           stmt(*n.in, indent);
                       },
                       [&](const stmt::ProcCall &n) {
                           if (n.results) {
                               out_ += "(" + join_names(*n.results) + ") := ";
                           }
                           out_ += "call " + n.name + "(";
                           for (size_t i = 0; i < n.args.size(); i++) {
                               out_ += i ? ", " : "";
                               print_expr(*n.args[i], out_);
                           }
                           out_ += ")";
                       },
                       [&](const stmt::Print &n) {
                           out_ += "print ";
                           if (auto *text = std::get_if<std::string>(&n.what)) {
                               out_ += quote(*text);
                           } else {
                               print_expr(*std::get<ExprPtr>(n.what), out_);
                           }
                       },
                       [&](const stmt::Dump &n) { out_ += "dump " + join_names(n.vars); },
                       [&](const stmt::Skip &) { out_ += "skip"; },
                       [&](const stmt::Block &n) { block(n.body, indent); },
                   },
                   s.node);
    }

   private:
    void pad(int indent) {
        out_.append(static_cast<size_t>(indent) * 4, ' ');
    }

    std::string &out_;
};

const Expr &strip(const Expr &e) {
    const Expr *cur = &e;
    while (auto *p = std::get_if<Paren>(&cur->node)) {
        cur = p->inner.get();
    }
    return *cur;
}

bool same_ptr(const StmtPtr &a, const StmtPtr &b) {
    if (!a || !b) {
        return !a && !b;
    }
    return same_structure(*a, *b);
}

bool same_list(const StmtList &a, const StmtList &b) {
    if (a.size() != b.size()) {
        return false;
    }
    for (size_t i = 0; i < a.size(); i++) {
        if (!same_structure(*a[i], *b[i])) {
            return false;
        }
    }
    return true;
}

bool same_bindings(const std::vector<Binding> &a, const std::vector<Binding> &b) {
    if (a.size() != b.size()) {
        return false;
    }
    for (size_t i = 0; i < a.size(); i++) {
        if (a[i].name != b[i].name || a[i].type != b[i].type) {
            return false;
        }
    }
    return true;
}

bool same_gate(const Gate &a, const Gate &b) {
    if (a.index() != b.index()) {
        return false;
    }
    if (auto *p = std::get_if<gate::Phase>(&a)) {
        return same_structure(*p->shift, *std::get<gate::Phase>(b).shift);
    }
    if (auto *f = std::get_if<gate::FT>(&a)) {
        return f->n == std::get<gate::FT>(b).n;
    }
    if (auto *m = std::get_if<gate::Matrix>(&a)) {
        return m->entries == std::get<gate::Matrix>(b).entries;
    }
    return true;
}

}  // namespace

std::string_view op_text(BinaryOp op) {
    switch (op) {
        case BinaryOp::Add:
            return "+";
        case BinaryOp::Sub:
            return "-";
        case BinaryOp::Mul:
            return "*";
        case BinaryOp::Div:
            return "/";
        case BinaryOp::Lt:
            return "<";
        case BinaryOp::Gt:
            return ">";
        case BinaryOp::Le:
            return "<=";
        case BinaryOp::Ge:
            return ">=";
        case BinaryOp::Eq:
            return "==";
        case BinaryOp::Ne:
            return "!=";
        case BinaryOp::And:
            return "&";
        case BinaryOp::Or:
            return "|";
    }
    return "?";
}

std::string_view op_text(UnaryOp op) {
    return op == UnaryOp::Neg ? "-" : "!";
}

std::string pretty_print(const Expr &expr) {
    std::string out;
    print_expr(expr, out);
    return out;
}

std::string pretty_print(const Gate &g) {
    return std::visit(overloaded{
                          [](const gate::H &) -> std::string { return "H"; },
                          [](const gate::Not &) -> std::string { return "Not"; },
                          [](const gate::CNot &) -> std::string { return "CNot"; },
                          [](const gate::Phase &p) -> std::string {
                              std::string out = "Phase ";
                              print_operand(*p.shift, kUnaryPrec, out);
                              return out;
                          },
                          [](const gate::FT &f) -> std::string { return "FT(" + std::to_string(f.n) + ")"; },
                          [](const gate::Matrix &m) -> std::string {
                              std::string out = "[[";
                              for (size_t i = 0; i < m.entries.size(); i++) {
                                  out += (i ? ", " : "") + complex_text(m.entries[i]);
                              }
                              return out + "]]";
                          },
                      },
                      g);
}

std::string pretty_print(const Stmt &s, int indent) {
    std::string out;
    StmtPrinter(out).stmt(s, indent);
    return out;
}

std::string pretty_print(const Program &program) {
    std::string out;
    StmtPrinter printer(out);
    if (!program.is_modular()) {
        printer.list(program.statements, 0);
        return out;
    }
    for (const auto &m : program.modules) {
        out += "module " + m.name + " ";
        printer.block(m.body, 0);
        out += ";\n";
    }
    return out;
}

bool same_structure(const Expr &a_in, const Expr &b_in) {
    const Expr &a = strip(a_in);
    const Expr &b = strip(b_in);
    if (a.node.index() != b.node.index()) {
        return false;
    }
    return std::visit(overloaded{
                          [&](const IntLit &n) { return n.value == std::get<IntLit>(b.node).value; },
                          [&](const FloatLit &n) { return n.value == std::get<FloatLit>(b.node).value; },
                          [&](const BoolLit &n) { return n.value == std::get<BoolLit>(b.node).value; },
                          [&](const VarRef &n) { return n.name == std::get<VarRef>(b.node).name; },
                          [&](const Paren &) { return false; },
                          [&](const Binary &n) {
                              const auto &o = std::get<Binary>(b.node);
                              return n.op == o.op && same_structure(*n.lhs, *o.lhs) && same_structure(*n.rhs, *o.rhs);
                          },
                          [&](const Unary &n) {
                              const auto &o = std::get<Unary>(b.node);
                              return n.op == o.op && same_structure(*n.operand, *o.operand);
                          },
                      },
                      a.node);
}

bool same_structure(const Stmt &a, const Stmt &b) {
    if (a.node.index() != b.node.index()) {
        return false;
    }
    return std::visit(
        overloaded{
            [&](const stmt::Allocate &n) {
                const auto &o = std::get<stmt::Allocate>(b.node);
                return n.type == o.type && n.name == o.name && same_structure(*n.init, *o.init);
            },
            [&](const stmt::Assign &n) {
                const auto &o = std::get<stmt::Assign>(b.node);
                return n.name == o.name && same_structure(*n.value, *o.value);
            },
            [&](const stmt::AssignMeasure &n) {
                const auto &o = std::get<stmt::AssignMeasure>(b.node);
                return n.target == o.target && n.source == o.source;
            },
            [&](const stmt::MeasureBranch &n) {
                const auto &o = std::get<stmt::MeasureBranch>(b.node);
                return n.qvar == o.qvar && same_ptr(n.then_branch, o.then_branch) &&
                       same_ptr(n.else_branch, o.else_branch);
            },
            [&](const stmt::If &n) {
                const auto &o = std::get<stmt::If>(b.node);
                return same_structure(*n.cond, *o.cond) && same_ptr(n.then_branch, o.then_branch) &&
                       same_ptr(n.else_branch, o.else_branch);
            },
            [&](const stmt::While &n) {
                const auto &o = std::get<stmt::While>(b.node);
                return same_structure(*n.cond, *o.cond) && same_ptr(n.body, o.body);
            },
            [&](const stmt::GateApply &n) {
                const auto &o = std::get<stmt::GateApply>(b.node);
                return n.vars == o.vars && same_gate(n.gate, o.gate);
            },
            [&](const stmt::Send &n) {
                const auto &o = std::get<stmt::Send>(b.node);
                return n.vars == o.vars && n.dest == o.dest;
            },
            [&](const stmt::Receive &n) {
                const auto &o = std::get<stmt::Receive>(b.node);
                return same_bindings(n.bindings, o.bindings) && n.source == o.source;
            },
            [&](const stmt::ProcDecl &n) {
                const auto &o = std::get<stmt::ProcDecl>(b.node);
                if (n.name != o.name || !same_bindings(n.params, o.params) ||
                    n.returns.has_value() != o.returns.has_value()) {
                    return false;
                }
                if (n.returns && !same_bindings(*n.returns, *o.returns)) {
                    return false;
                }
                return same_list(n.body, o.body) && same_ptr(n.in, o.in);
            },
            [&](const stmt::ProcCall &n) {
                const auto &o = std::get<stmt::ProcCall>(b.node);
                if (n.name != o.name || n.results != o.results || n.args.size() != o.args.size()) {
                    return false;
                }
                for (size_t i = 0; i < n.args.size(); i++) {
                    if (!same_structure(*n.args[i], *o.args[i])) {
                        return false;
                    }
                }
                return true;
            },
            [&](const stmt::Print &n) {
                const auto &o = std::get<stmt::Print>(b.node);
                if (n.what.index() != o.what.index()) {
                    return false;
                }
                if (auto *s = std::get_if<std::string>(&n.what)) {
                    return *s == std::get<std::string>(o.what);
                }
                return same_structure(*std::get<ExprPtr>(n.what), *std::get<ExprPtr>(o.what));
            },
            [&](const stmt::Dump &n) { return n.vars == std::get<stmt::Dump>(b.node).vars; },
            [&](const stmt::Skip &) { return true; },
            [&](const stmt::Block &n) { return same_list(n.body, std::get<stmt::Block>(b.node).body); },
        },
        a.node);
}

bool same_structure(const Program &a, const Program &b) {
    if (!same_list(a.statements, b.statements) || a.modules.size() != b.modules.size()) {
        return false;
    }
    for (size_t i = 0; i < a.modules.size(); i++) {
        if (a.modules[i].name != b.modules[i].name || !same_list(a.modules[i].body, b.modules[i].body)) {
            return false;
        }
    }
    return true;
}

}  // namespace cqpl::syntax
