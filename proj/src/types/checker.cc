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

#include "cqpl/types/checker.h"

#include <algorithm>

#include "cqpl/qcore/gates.h"

namespace cqpl::types {

using namespace syntax;

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

std::optional<int64_t> int_literal(const Expr &e) {
    const Expr *cur = &e;
    while (auto *p = std::get_if<Paren>(&cur->node)) {
        cur = p->inner.get();
    }
    if (auto *i = std::get_if<IntLit>(&cur->node)) {
        return i->value;
    }
    if (auto *b = std::get_if<BoolLit>(&cur->node)) {
        return b->value ? 1 : 0;
    }
    return std::nullopt;
}

std::optional<size_t> first_duplicate(const std::vector<std::string> &names) {
    for (size_t i = 0; i < names.size(); i++) {
        for (size_t j = 0; j < i; j++) {
            if (names[i] == names[j]) {
                return i;
            }
        }
    }
    return std::nullopt;
}

std::string quoted(const std::string &s) {
    return "'" + s + "'";
}

/// Resolves a variable that must be a live quantum variable.
std::optional<Diagnostic> require_quantum(const std::string &name, TypingContext &ctx, SourcePos pos,
                                          const TypingContext::Entry **out = nullptr) {
    const auto *e = ctx.lookup(name);
    if (!e) {
        return make_diagnostic(ErrorCode::E_UNDECLARED, pos, quoted(name) + " is not declared");
    }
    if (e->proc) {
        return make_diagnostic(ErrorCode::E_NOT_QUANTUM, pos, quoted(name) + " is a procedure");
    }
    if (e->sent_away) {
        return make_diagnostic(ErrorCode::E_USE_AFTER_SEND, pos, quoted(name) + " was sent away and is no longer owned");
    }
    if (!e->sig.quantum()) {
        return make_diagnostic(ErrorCode::E_NOT_QUANTUM, pos, quoted(name) + " is not a quantum variable");
    }
    if (out) {
        *out = e;
    }
    return std::nullopt;
}

std::optional<Diagnostic> require_module_peer(const std::string &peer, TypingContext &ctx, SourcePos pos) {
    if (ctx.module.empty()) {
        return make_diagnostic(ErrorCode::E_SEND_OUTSIDE_MODULE, pos, "communication is only allowed inside modules");
    }
    if (!ctx.modules.contains(peer)) {
        return make_diagnostic(ErrorCode::E_UNKNOWN_MODULE, pos, "unknown module " + quoted(peer));
    }
    if (peer == ctx.module) {
        return make_diagnostic(ErrorCode::E_SELF_SEND, pos, "module " + quoted(peer) + " cannot talk to itself");
    }
    return std::nullopt;
}

class Checker {
   public:
    explicit Checker(std::vector<Diagnostic> &out) : out_(out) {
    }

    void check_body(StmtList &body, TypingContext ctx) {
        std::swap(ctx_, ctx);
        for (auto &s : body) {
            stmt(*s);
        }
        std::swap(ctx_, ctx);
    }

   private:
    void report(ErrorCode code, SourcePos pos, std::string msg) {
        out_.push_back(make_diagnostic(code, pos, std::move(msg)));
    }
    void report(std::optional<Diagnostic> d) {
        if (d) {
            out_.push_back(std::move(*d));
        }
    }

    // --- expressions --------------------------------------------------------

    std::optional<TypeSignature> expr(Expr &e) {
        std::optional<TypeSignature> t = std::visit(
            overloaded{
                [&](IntLit &) -> std::optional<TypeSignature> { return TypeSignature::integer(); },
                [&](FloatLit &) -> std::optional<TypeSignature> { return TypeSignature::floating(); },
                [&](BoolLit &) -> std::optional<TypeSignature> { return TypeSignature::bit(); },
                [&](VarRef &v) -> std::optional<TypeSignature> {
                    const auto *entry = ctx_.lookup(v.name);
                    if (!entry) {
                        report(ErrorCode::E_UNDECLARED, e.pos, quoted(v.name) + " is not declared");
                        return std::nullopt;
                    }
                    if (entry->proc) {
                        report(ErrorCode::E_NOT_CLASSICAL, e.pos, quoted(v.name) + " is a procedure, not a value");
                        return std::nullopt;
                    }
                    if (entry->sent_away) {
                        report(ErrorCode::E_USE_AFTER_SEND, e.pos, quoted(v.name) + " was sent away");
                        return std::nullopt;
                    }
                    if (!entry->sig.classical()) {
                        report(ErrorCode::E_NOT_CLASSICAL, e.pos,
                               "quantum variable " + quoted(v.name) + " cannot be used in an expression");
                        return std::nullopt;
                    }
                    return entry->sig;
                },
                [&](Paren &p) { return expr(*p.inner); },
                [&](Binary &b) -> std::optional<TypeSignature> {
                    auto l = expr(*b.lhs);
                    auto r = expr(*b.rhs);
                    if (!l || !r) {
                        return std::nullopt;
                    }
                    switch (b.op) {
                        case BinaryOp::And:
                        case BinaryOp::Or:
                            if (!l->is_bit() || !r->is_bit()) {
                                report(ErrorCode::E_TYPE_MISMATCH, e.pos,
                                       "operator '" + std::string(op_text(b.op)) + "' needs bit operands");
                                return std::nullopt;
                            }
                            return TypeSignature::bit();
                        case BinaryOp::Add:
                        case BinaryOp::Sub:
                        case BinaryOp::Mul:
                        case BinaryOp::Div:
                            if (!l->numeric() || !r->numeric()) {
                                report(ErrorCode::E_TYPE_MISMATCH, e.pos, "arithmetic needs numeric operands");
                                return std::nullopt;
                            }
                            return l->is_float || r->is_float ? TypeSignature::floating() : TypeSignature::integer();
                        default:
                            if (!l->numeric() || !r->numeric()) {
                                report(ErrorCode::E_TYPE_MISMATCH, e.pos, "comparison needs numeric operands");
                                return std::nullopt;
                            }
                            return TypeSignature::bit();
                    }
                },
                [&](Unary &u) -> std::optional<TypeSignature> {
                    auto t = expr(*u.operand);
                    if (!t) {
                        return std::nullopt;
                    }
                    if (u.op == UnaryOp::Not) {
                        if (!t->is_bit()) {
                            report(ErrorCode::E_TYPE_MISMATCH, e.pos, "'!' needs a bit operand");
                            return std::nullopt;
                        }
                        return TypeSignature::bit();
                    }
                    if (!t->numeric()) {
                        report(ErrorCode::E_TYPE_MISMATCH, e.pos, "'-' needs a numeric operand");
                        return std::nullopt;
                    }
                    return t->is_float ? TypeSignature::floating() : TypeSignature::integer();
                },
            },
            e.node);
        e.type = t;
        return t;
    }

    void condition(Expr &e) {
        auto t = expr(e);
        if (t && !t->is_bit()) {
            report(ErrorCode::E_COND_NOT_BIT, e.pos, "condition has type " + to_string(*t) + ", expected bit");
        }
    }

    // --- statements ---------------------------------------------------------

    void branch(Stmt &s, bool loop_body = false) {
        ctx_.push(loop_body);
        stmt(s);
        ctx_.pop();
    }

    void declare(const std::string &name, TypingContext::Entry entry, SourcePos pos) {
        if (!ctx_.declare(name, entry)) {
            const auto *old = ctx_.lookup(name);
            if (old && old->sent_away) {
                ctx_.redeclare(name, entry);
                return;
            }
            report(ErrorCode::E_REDECLARED, pos, quoted(name) + " is already declared in this scope");
        }
    }

    void stmt(Stmt &s) {
        const SourcePos pos = s.pos;
        std::visit(
            overloaded{
                [&](stmt::Allocate &n) {
                    TypeSignature sig = signature_of(n.type);
                    auto t = expr(*n.init);
                    if (sig.quantum()) {
                        auto lit = int_literal(*n.init);
                        if (!lit || (*lit != 0 && *lit != 1)) {
                            report(ErrorCode::E_BAD_INIT, n.init->pos,
                                   "quantum variables are initialised with the literal 0 or 1");
                        }
                    } else if (t && !assignable(n.type, *t, int_literal(*n.init))) {
                        report(ErrorCode::E_TYPE_MISMATCH, n.init->pos,
                               "cannot initialise " + std::string(type_name(n.type)) + " with " + to_string(*t));
                    }
                    declare(n.name, {n.type, sig}, pos);
                },
                [&](stmt::Assign &n) {
                    auto t = expr(*n.value);
                    auto *entry = ctx_.lookup(n.name);
                    if (!entry) {
                        report(ErrorCode::E_UNDECLARED, pos, quoted(n.name) + " is not declared");
                        return;
                    }
                    if (entry->proc || !entry->sig.classical()) {
                        report(entry->sent_away ? ErrorCode::E_USE_AFTER_SEND : ErrorCode::E_NOT_CLASSICAL, pos,
                               "cannot assign to " + quoted(n.name) + "; use measure for quantum variables");
                        return;
                    }
                    if (t && !assignable(entry->type, *t, int_literal(*n.value))) {
                        report(ErrorCode::E_TYPE_MISMATCH, pos,
                               "cannot assign " + to_string(*t) + " to " + std::string(type_name(entry->type)));
                    }
                },
                [&](stmt::AssignMeasure &n) { report(check_measure(n.target, n.source, ctx_, pos)); },
                [&](stmt::MeasureBranch &n) {
                    report(require_quantum(n.qvar, ctx_, pos));
                    branch(*n.then_branch);
                    branch(*n.else_branch);
                },
                [&](stmt::If &n) {
                    condition(*n.cond);
                    branch(*n.then_branch);
                    if (n.else_branch) {
                        branch(*n.else_branch);
                    }
                },
                [&](stmt::While &n) {
                    condition(*n.cond);
                    branch(*n.body, true);
                },
                [&](stmt::GateApply &n) {
                    if (auto *p = std::get_if<gate::Phase>(&n.gate)) {
                        auto t = expr(*p->shift);
                        if (t && !t->numeric()) {
                            report(ErrorCode::E_BAD_PARAM, p->shift->pos, "Phase needs a real angle");
                        }
                    }
                    report(check_gate_apply(n.vars, n.gate, ctx_, pos));
                },
                [&](stmt::Send &) { report(check_send_receive(s, ctx_)); },
                [&](stmt::Receive &) { report(check_send_receive(s, ctx_)); },
                [&](stmt::ProcDecl &n) { proc_decl(n, pos); },
                [&](stmt::ProcCall &n) { proc_call(n, pos); },
                [&](stmt::Print &n) {
                    if (auto *e = std::get_if<ExprPtr>(&n.what)) {
                        expr(**e);
                    }
                },
                [&](stmt::Dump &n) {
                    if (auto dup = first_duplicate(n.vars)) {
                        report(ErrorCode::E_DUP_TUPLE, pos, quoted(n.vars[*dup]) + " appears twice");
                    }
                    for (const auto &v : n.vars) {
                        report(require_quantum(v, ctx_, pos));
                    }
                },
                [&](stmt::Skip &) {},
                [&](stmt::Block &n) {
                    ctx_.push();
                    for (auto &b : n.body) {
                        stmt(*b);
                    }
                    ctx_.pop();
                },
            },
            s.node);
    }

    void proc_decl(stmt::ProcDecl &n, SourcePos pos) {
        std::vector<std::string> names;
        for (const auto &p : n.params) {
            names.push_back(p.name);
        }
        if (auto dup = first_duplicate(names)) {
            report(ErrorCode::E_REDECLARED, n.params[*dup].pos, "parameter " + quoted(names[*dup]) + " repeats");
        }

        TypingContext body_ctx;
        body_ctx.module = ctx_.module;
        body_ctx.modules = ctx_.modules;
        for (const auto &[pn, pe] : ctx_.visible_procs()) {
            body_ctx.declare(pn, pe);
        }
        TypingContext::Entry self;
        self.proc = &n;
        body_ctx.redeclare(n.name, self);
        body_ctx.push();
        for (const auto &p : n.params) {
            TypingContext::Entry e{p.type, signature_of(p.type)};
            e.borrowed = e.sig.quantum();
            body_ctx.redeclare(p.name, e);
        }
        body_ctx.push();
        check_body(n.body, std::move(body_ctx));

        ctx_.push();
        ctx_.declare(n.name, self);
        stmt(*n.in);
        ctx_.pop();
        (void)pos;
    }

    void proc_call(stmt::ProcCall &n, SourcePos pos) {
        const auto *entry = ctx_.lookup(n.name);
        if (!entry || !entry->proc) {
            for (auto &a : n.args) {
                if (!std::holds_alternative<VarRef>(a->node)) {
                    expr(*a);
                }
            }
            report(ErrorCode::E_UNKNOWN_PROC, pos, "unknown procedure " + quoted(n.name));
            return;
        }
        const auto &params = entry->proc->params;
        if (params.size() != n.args.size()) {
            report(ErrorCode::E_ARITY, pos,
                   quoted(n.name) + " takes " + std::to_string(params.size()) + " argument(s), got " +
                       std::to_string(n.args.size()));
            return;
        }
        std::vector<std::string> quantum_args;
        std::vector<VarType> classical_params;
        for (size_t i = 0; i < params.size(); i++) {
            TypeSignature psig = signature_of(params[i].type);
            Expr &arg = *n.args[i];
            if (psig.quantum()) {
                auto *ref = std::get_if<VarRef>(&arg.node);
                if (!ref) {
                    report(ErrorCode::E_ARG_TYPE, arg.pos,
                           "argument " + std::to_string(i + 1) + " must name a quantum variable");
                    continue;
                }
                const TypingContext::Entry *q = nullptr;
                if (auto d = require_quantum(ref->name, ctx_, arg.pos, &q)) {
                    report(std::move(d));
                    continue;
                }
                if (!type_equiv(q->sig, psig)) {
                    report(ErrorCode::E_ARG_TYPE, arg.pos,
                           "argument " + quoted(ref->name) + " has type " + to_string(q->sig) + ", expected " +
                               to_string(psig));
                }
                quantum_args.push_back(ref->name);
            } else {
                classical_params.push_back(params[i].type);
                auto t = expr(arg);
                if (t && !assignable(params[i].type, *t, int_literal(arg))) {
                    report(ErrorCode::E_ARG_TYPE, arg.pos,
                           "argument " + std::to_string(i + 1) + " has type " + to_string(*t) + ", expected " +
                               std::string(type_name(params[i].type)));
                }
            }
        }
        if (auto dup = first_duplicate(quantum_args)) {
            report(ErrorCode::E_DUP_TUPLE, pos, quoted(quantum_args[*dup]) + " is passed twice");
        }
        if (!n.results) {
            return;
        }
        if (n.results->size() != classical_params.size()) {
            report(ErrorCode::E_ARITY, pos,
                   quoted(n.name) + " returns " + std::to_string(classical_params.size()) + " value(s), " +
                       std::to_string(n.results->size()) + " result name(s) given");
            return;
        }
        if (auto dup = first_duplicate(*n.results)) {
            report(ErrorCode::E_DUP_TUPLE, pos, "result " + quoted((*n.results)[*dup]) + " appears twice");
        }
        for (size_t i = 0; i < n.results->size(); i++) {
            const std::string &r = (*n.results)[i];
            const auto *dst = ctx_.lookup(r);
            if (!dst) {
                report(ErrorCode::E_UNDECLARED, pos, "result " + quoted(r) + " is not declared");
            } else if (dst->proc || !dst->sig.classical()) {
                report(ErrorCode::E_NOT_CLASSICAL, pos, "result " + quoted(r) + " is not a classical variable");
            } else if (!assignable(dst->type, signature_of(classical_params[i]))) {
                report(ErrorCode::E_TYPE_MISMATCH, pos,
                       "result " + quoted(r) + " cannot hold a " + std::string(type_name(classical_params[i])));
            }
        }
    }

    std::vector<Diagnostic> &out_;
    TypingContext ctx_;
};

}  // namespace

// --- Diagnostic -------------------------------------------------------------

std::string Diagnostic::format(std::string_view file) const {
    std::string out(file);
    out += ":" + std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": ";
    out += severity == Severity::Error ? "error" : "warning";
    out += "[" + std::string(code_name(code)) + "]: " + message;
    return out;
}

Diagnostic make_diagnostic(ErrorCode code, SourcePos pos, std::string message) {
    return Diagnostic{is_warning(code) ? Severity::Warning : Severity::Error, pos, code, std::move(message)};
}

bool CheckResult::ok() const {
    return std::none_of(diagnostics.begin(), diagnostics.end(),
                        [](const Diagnostic &d) { return d.severity == Severity::Error; });
}

bool CheckResult::has(ErrorCode code) const {
    return std::any_of(diagnostics.begin(), diagnostics.end(), [&](const Diagnostic &d) { return d.code == code; });
}

// --- TypingContext ----------------------------------------------------------

TypingContext::TypingContext() {
    scopes_.emplace_back();
}

void TypingContext::push(bool loop_body) {
    scopes_.push_back(Scope{{}, loop_body});
}

void TypingContext::pop() {
    scopes_.pop_back();
}

TypingContext::Entry *TypingContext::lookup(const std::string &name) {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
        auto f = it->names.find(name);
        if (f != it->names.end()) {
            return &f->second;
        }
    }
    return nullptr;
}

const TypingContext::Entry *TypingContext::lookup(const std::string &name) const {
    return const_cast<TypingContext *>(this)->lookup(name);
}

int TypingContext::scope_of(const std::string &name) const {
    for (int i = static_cast<int>(scopes_.size()) - 1; i >= 0; i--) {
        if (scopes_[i].names.contains(name)) {
            return i;
        }
    }
    return -1;
}

bool TypingContext::in_current_scope(const std::string &name) const {
    return scopes_.back().names.contains(name);
}

bool TypingContext::declare(const std::string &name, Entry entry) {
    return scopes_.back().names.emplace(name, entry).second;
}

void TypingContext::redeclare(const std::string &name, Entry entry) {
    scopes_.back().names.insert_or_assign(name, entry);
}

int TypingContext::loop_floor() const {
    for (int i = static_cast<int>(scopes_.size()) - 1; i >= 0; i--) {
        if (scopes_[i].loop_body) {
            return i;
        }
    }
    return -1;
}

std::map<std::string, TypingContext::Entry> TypingContext::visible_procs() const {
    std::map<std::string, Entry> out;
    for (const auto &s : scopes_) {
        for (const auto &[n, e] : s.names) {
            if (e.proc) {
                out[n] = e;
            } else {
                out.erase(n);
            }
        }
    }
    return out;
}

// --- judgments --------------------------------------------------------------

bool assignable(VarType target, const TypeSignature &value, std::optional<int64_t> literal) {
    if (!value.classical() || value.width == 0) {
        return false;
    }
    switch (target) {
        case VarType::Float:
            return true;
        case VarType::Int:
        case VarType::Short:
            return !value.is_float;
        case VarType::Bit:
            return value.is_bit() || (literal && (*literal == 0 || *literal == 1));
        default:
            return false;
    }
}

std::optional<Diagnostic> check_gate_apply(const std::vector<std::string> &vars, const Gate &gate,
                                           TypingContext &ctx, SourcePos pos) {
    if (vars.empty()) {
        return make_diagnostic(ErrorCode::E_DIM_MISMATCH, pos, "gate applied to no variables");
    }
    if (auto dup = first_duplicate(vars)) {
        return make_diagnostic(ErrorCode::E_DUP_TUPLE, pos,
                               quoted(vars[*dup]) + " appears more than once in the tuple");
    }
    int width = 0;
    for (const auto &v : vars) {
        const TypingContext::Entry *e = nullptr;
        if (auto d = require_quantum(v, ctx, pos, &e)) {
            return d;
        }
        width += e->sig.width;
    }
    int gate_qbits = std::visit(overloaded{
                                    [](const gate::H &) { return 1; },
                                    [](const gate::Not &) { return 1; },
                                    [](const gate::Phase &) { return 1; },
                                    [](const gate::CNot &) { return 2; },
                                    [](const gate::FT &f) { return f.n < 1 || f.n > 64 ? -2 : static_cast<int>(f.n); },
                                    [](const gate::Matrix &m) {
                                        try {
                                            return qcore::qbit_count(qcore::from_row_major(m.entries));
                                        } catch (const Error &) {
                                            return -1;
                                        }
                                    },
                                },
                                gate);
    if (gate_qbits == -2) {
        return make_diagnostic(ErrorCode::E_BAD_PARAM, pos, "FT(n) needs 1 <= n <= 64");
    }
    if (auto *m = std::get_if<gate::Matrix>(&gate)) {
        if (gate_qbits < 0) {
            return make_diagnostic(ErrorCode::E_DIM_MISMATCH, pos, "matrix side is not a power of two");
        }
        double err = qcore::unitarity_error(qcore::from_row_major(m->entries));
        if (err > qcore::kUnitaryTol) {
            return make_diagnostic(ErrorCode::E_NOT_UNITARY, pos,
                                   "matrix is not unitary (max deviation of U^dagger U from I is " +
                                       std::to_string(err) + ")");
        }
    }
    if (gate_qbits != width) {
        return make_diagnostic(ErrorCode::E_DIM_MISMATCH, pos,
                               "gate acts on " + std::to_string(gate_qbits) + " qbit(s) but the tuple has " +
                                   std::to_string(width));
    }
    return std::nullopt;
}

std::optional<Diagnostic> check_measure(const std::string &target, const std::string &source, TypingContext &ctx,
                                        SourcePos pos) {
    const TypingContext::Entry *q = nullptr;
    if (auto d = require_quantum(source, ctx, pos, &q)) {
        return d;
    }
    const auto *t = ctx.lookup(target);
    if (!t) {
        return make_diagnostic(ErrorCode::E_UNDECLARED, pos, quoted(target) + " is not declared");
    }
    if (t->proc || !t->sig.classical()) {
        return make_diagnostic(ErrorCode::E_NOT_CLASSICAL, pos, "measurement target " + quoted(target) +
                                                                    " must be classical");
    }
    if (t->sig.is_float) {
        return make_diagnostic(ErrorCode::E_MEASURE_FLOAT, pos, "cannot measure into float " + quoted(target));
    }
    if (t->sig.width != q->sig.width) {
        return make_diagnostic(ErrorCode::E_MEASURE_WIDTH, pos,
                               quoted(target) + " has " + std::to_string(t->sig.width) + " bit(s) but " +
                                   quoted(source) + " has " + std::to_string(q->sig.width) + " qbit(s)");
    }
    return std::nullopt;
}

std::optional<Diagnostic> check_send_receive(const Stmt &s, TypingContext &ctx) {
    const SourcePos pos = s.pos;
    if (auto *send = std::get_if<stmt::Send>(&s.node)) {
        if (auto d = require_module_peer(send->dest, ctx, pos)) {
            return d;
        }
        if (auto dup = first_duplicate(send->vars)) {
            return make_diagnostic(ErrorCode::E_DUP_TUPLE, pos, quoted(send->vars[*dup]) + " is sent twice");
        }
        for (const auto &v : send->vars) {
            const auto *e = ctx.lookup(v);
            if (!e) {
                return make_diagnostic(ErrorCode::E_UNDECLARED, pos, quoted(v) + " is not declared");
            }
            if (e->proc) {
                return make_diagnostic(ErrorCode::E_NOT_CLASSICAL, pos, "cannot send procedure " + quoted(v));
            }
            if (e->sent_away) {
                return make_diagnostic(ErrorCode::E_USE_AFTER_SEND, pos, quoted(v) + " was already sent away");
            }
            if (e->borrowed) {
                return make_diagnostic(ErrorCode::E_SEND_BORROWED, pos,
                                       "parameter " + quoted(v) + " belongs to the caller and cannot be sent");
            }
            if (e->sig.quantum() && ctx.scope_of(v) < ctx.loop_floor()) {
                return make_diagnostic(ErrorCode::E_USE_AFTER_SEND, pos,
                                       quoted(v) + " is declared outside the loop and would be sent again");
            }
        }
        for (const auto &v : send->vars) {
            auto *e = ctx.lookup(v);
            if (e->sig.quantum()) {
                e->sent_away = true;
            }
        }
        return std::nullopt;
    }
    if (auto *recv = std::get_if<stmt::Receive>(&s.node)) {
        if (auto d = require_module_peer(recv->source, ctx, pos)) {
            return d;
        }
        std::vector<std::string> names;
        for (const auto &b : recv->bindings) {
            names.push_back(b.name);
        }
        if (auto dup = first_duplicate(names)) {
            return make_diagnostic(ErrorCode::E_DUP_TUPLE, recv->bindings[*dup].pos,
                                   quoted(names[*dup]) + " is received twice");
        }
        for (const auto &b : recv->bindings) {
            const auto *e = ctx.lookup(b.name);
            if (e && !e->sent_away) {
                return make_diagnostic(ErrorCode::E_RECV_SHADOW, b.pos,
                                       "receive would shadow the existing variable " + quoted(b.name));
            }
        }
        for (const auto &b : recv->bindings) {
            ctx.redeclare(b.name, {b.type, signature_of(b.type)});
        }
        return std::nullopt;
    }
    return make_diagnostic(ErrorCode::E_INTERNAL, pos, "not a send or receive statement");
}

CheckResult check_program(Program &program) {
    CheckResult result;
    Checker checker(result.diagnostics);
    if (!program.is_modular()) {
        checker.check_body(program.statements, TypingContext{});
        return result;
    }
    std::set<std::string> names;
    for (const auto &m : program.modules) {
        names.insert(m.name);
    }
    for (auto &m : program.modules) {
        TypingContext ctx;
        ctx.module = m.name;
        ctx.modules = names;
        checker.check_body(m.body, std::move(ctx));
    }
    return result;
}

}  // namespace cqpl::types
