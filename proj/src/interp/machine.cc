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

#include "cqpl/interp/machine.h"

#include <algorithm>
#include <cmath>

#include "cqpl/qcore/format.h"
#include "cqpl/qcore/gates.h"

namespace cqpl::interp {

using namespace syntax;
using types::VarType;

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

ClassicalValue arithmetic(BinaryOp op, const ClassicalValue &a, const ClassicalValue &b, SourcePos pos) {
    if (a.is_float() || b.is_float()) {
        double x = a.as_double(), y = b.as_double();
        switch (op) {
            case BinaryOp::Add:
                return ClassicalValue::floating(x + y);
            case BinaryOp::Sub:
                return ClassicalValue::floating(x - y);
            case BinaryOp::Mul:
                return ClassicalValue::floating(x * y);
            default:
                if (y == 0.0) {
                    throw Error(ErrorCode::E_DIV_ZERO, "division by zero", pos);
                }
                return ClassicalValue::floating(x / y);
        }
    }
    int64_t x = a.as_int(), y = b.as_int();
    switch (op) {
        case BinaryOp::Add:
            return ClassicalValue::integer(x + y);
        case BinaryOp::Sub:
            return ClassicalValue::integer(x - y);
        case BinaryOp::Mul:
            return ClassicalValue::integer(x * y);
        default:
            if (y == 0) {
                throw Error(ErrorCode::E_DIV_ZERO, "division by zero", pos);
            }
            return ClassicalValue::integer(x / y);
    }
}

ClassicalValue compare(BinaryOp op, const ClassicalValue &a, const ClassicalValue &b) {
    bool r;
    if (a.is_float() || b.is_float()) {
        double x = a.as_double(), y = b.as_double();
        r = op == BinaryOp::Lt ? x < y : op == BinaryOp::Gt ? x > y : op == BinaryOp::Le ? x <= y
                                    : op == BinaryOp::Ge ? x >= y : op == BinaryOp::Eq ? x == y : x != y;
    } else {
        int64_t x = a.as_int(), y = b.as_int();
        r = op == BinaryOp::Lt ? x < y : op == BinaryOp::Gt ? x > y : op == BinaryOp::Le ? x <= y
                                    : op == BinaryOp::Ge ? x >= y : op == BinaryOp::Eq ? x == y : x != y;
    }
    return ClassicalValue::bit(r);
}

int width_of(VarType t) {
    return types::signature_of(t).width;
}

}  // namespace

ClassicalValue eval_expr(const Expr &e, const std::function<ClassicalValue(const std::string &, SourcePos)> &lookup) {
    return std::visit(
        overloaded{
            [](const IntLit &n) { return ClassicalValue::integer(n.value); },
            [](const FloatLit &n) { return ClassicalValue::floating(n.value); },
            [](const BoolLit &n) { return ClassicalValue::bit(n.value); },
            [&](const VarRef &n) { return lookup(n.name, e.pos); },
            [&](const Paren &n) { return eval_expr(*n.inner, lookup); },
            [&](const Binary &n) {
                ClassicalValue a = eval_expr(*n.lhs, lookup);
                ClassicalValue b = eval_expr(*n.rhs, lookup);
                switch (n.op) {
                    case BinaryOp::Add:
                    case BinaryOp::Sub:
                    case BinaryOp::Mul:
                    case BinaryOp::Div:
                        return arithmetic(n.op, a, b, e.pos);
                    case BinaryOp::And:
                        return ClassicalValue::bit(a.truthy() && b.truthy());
                    case BinaryOp::Or:
                        return ClassicalValue::bit(a.truthy() || b.truthy());
                    default:
                        return compare(n.op, a, b);
                }
            },
            [&](const Unary &n) {
                ClassicalValue v = eval_expr(*n.operand, lookup);
                if (n.op == UnaryOp::Not) {
                    return ClassicalValue::bit(!v.truthy());
                }
                return v.is_float() ? ClassicalValue::floating(-v.as_double()) : ClassicalValue::integer(-v.as_int());
            },
        },
        e.node);
}

namespace {

struct ProcClosure;
using ProcRef = std::shared_ptr<const ProcClosure>;

struct ProcClosure {
    const stmt::ProcDecl *decl;
    std::map<std::string, ProcRef> env;
};

struct ClassicalVar {
    ClassicalValue value;
    VarType type;
};
struct QuantumVar {
    std::vector<int> indices;
    VarType type;
    bool borrowed;
};
using Entry = std::variant<ClassicalVar, QuantumVar, ProcRef>;

struct Scope {
    std::map<std::string, Entry> vars;
    /// Owned quantum variables in declaration order, released in reverse.
    std::vector<std::string> owned;
};

struct Frame {
    std::vector<Scope> scopes;
};

struct SeqTask {
    const StmtList *list;
    size_t index;
};
struct SingleTask {
    const Stmt *stmt;
};
struct LoopTask {
    const stmt::While *loop;
    SourcePos pos;
};
struct PopScopeTask {};
struct ReturnTask {
    std::optional<std::vector<std::string>> results;
    std::vector<std::string> classical_params;
};
using Task = std::variant<SeqTask, SingleTask, LoopTask, PopScopeTask, ReturnTask>;

}  // namespace

struct Machine::Impl {
    std::string name;
    Ports ports;
    MachineConfig config;
    std::vector<Frame> frames;
    std::vector<Task> tasks;
    std::optional<std::string> open_line;
    SourcePos last_pos;

    Impl(std::string n, const StmtList &body, Ports p, MachineConfig c)
        : name(std::move(n)), ports(p), config(c) {
        frames.push_back(Frame{{Scope{}}});
        tasks.push_back(SeqTask{&body, 0});
    }

    // --- output -------------------------------------------------------------

    void emit(const std::string &text) {
        if (ports.output) {
            ports.output->line(name, text);
        }
    }
    void flush_line() {
        if (open_line) {
            emit(*open_line);
            open_line.reset();
        }
    }

    // --- bindings -----------------------------------------------------------

    Frame &frame() {
        return frames.back();
    }
    Scope &scope() {
        return frame().scopes.back();
    }

    Entry *find(const std::string &name_) {
        auto &scopes = frame().scopes;
        for (auto it = scopes.rbegin(); it != scopes.rend(); ++it) {
            auto f = it->vars.find(name_);
            if (f != it->vars.end()) {
                return &f->second;
            }
        }
        return nullptr;
    }

    Entry &require(const std::string &name_, SourcePos pos) {
        Entry *b = find(name_);
        if (!b) {
            throw Error(ErrorCode::E_UNDECLARED, "'" + name_ + "' is not bound", pos);
        }
        return *b;
    }

    QuantumVar &quantum_var(const std::string &name_, SourcePos pos) {
        auto *q = std::get_if<QuantumVar>(&require(name_, pos));
        if (!q) {
            throw Error(ErrorCode::E_NOT_QUANTUM, "'" + name_ + "' is not a quantum variable", pos);
        }
        return *q;
    }

    ClassicalVar &classical_var(const std::string &name_, SourcePos pos) {
        auto *c = std::get_if<ClassicalVar>(&require(name_, pos));
        if (!c) {
            throw Error(ErrorCode::E_NOT_CLASSICAL, "'" + name_ + "' is not a classical variable", pos);
        }
        return *c;
    }

    std::vector<int> targets(const std::vector<std::string> &vars, SourcePos pos) {
        std::vector<int> out;
        for (const auto &v : vars) {
            const auto &q = quantum_var(v, pos);
            out.insert(out.end(), q.indices.begin(), q.indices.end());
        }
        return out;
    }

    ClassicalValue eval(const Expr &e) {
        return eval_expr(e, [this](const std::string &n, SourcePos pos) { return classical_var(n, pos).value; });
    }

    void release_owned(Scope &s, bool module_exit = false) {
        for (auto it = s.owned.rbegin(); it != s.owned.rend(); ++it) {
            auto f = s.vars.find(*it);
            if (f == s.vars.end()) {
                continue;  // sent away
            }
            if (auto *q = std::get_if<QuantumVar>(&f->second); q && !q->borrowed) {
                ports.quantum->release(q->indices, module_exit);
            }
        }
        s.owned.clear();
    }

    void bind(const std::string &n, Entry b) {
        Scope &s = scope();
        auto existing = s.vars.find(n);
        if (existing != s.vars.end()) {
            if (auto *q = std::get_if<QuantumVar>(&existing->second); q && !q->borrowed) {
                ports.quantum->release(q->indices, false);
            }
            std::erase(s.owned, n);
        }
        if (auto *q = std::get_if<QuantumVar>(&b); q && !q->borrowed) {
            s.owned.push_back(n);
        }
        s.vars.insert_or_assign(n, std::move(b));
    }

    void push_scope() {
        frame().scopes.emplace_back();
    }

    /// Branches and loop bodies run in their own scope.
    void push_branch(const Stmt *s) {
        push_scope();
        tasks.push_back(PopScopeTask{});
        tasks.push_back(SingleTask{s});
    }

    void pop_scope(bool module_exit = false) {
        release_owned(scope(), module_exit);
        frame().scopes.pop_back();
    }

    std::map<std::string, ProcRef> visible_procs() {
        std::map<std::string, ProcRef> out;
        for (const auto &s : frame().scopes) {
            for (const auto &[n, b] : s.vars) {
                if (auto *p = std::get_if<ProcRef>(&b)) {
                    out[n] = *p;
                } else {
                    out.erase(n);
                }
            }
        }
        return out;
    }

    // --- statements ---------------------------------------------------------

    GateOp gate_op(const Gate &g, int width, SourcePos pos) {
        return std::visit(
            overloaded{
                [](const gate::H &) { return GateOp{"H", qcore::hadamard()}; },
                [](const gate::Not &) { return GateOp{"Not", qcore::pauli_x()}; },
                [](const gate::CNot &) { return GateOp{"CNot", qcore::cnot()}; },
                [&](const gate::Phase &p) {
                    double angle = eval(*p.shift).as_double();
                    if (!std::isfinite(angle)) {
                        throw Error(ErrorCode::E_BAD_PARAM, "Phase needs a finite angle", pos);
                    }
                    return GateOp{"Phase(" + qcore::format_number(angle) + ")", qcore::phase(angle)};
                },
                [&](const gate::FT &f) {
                    return GateOp{"FT(" + std::to_string(f.n) + ")", qcore::ft(static_cast<int>(f.n))};
                },
                [&](const gate::Matrix &m) {
                    (void)width;
                    return GateOp{"Matrix", qcore::from_row_major(m.entries)};
                },
            },
            g);
    }

    void exec_gate(const stmt::GateApply &n, SourcePos pos) {
        std::vector<int> t = targets(n.vars, pos);
        if (auto *f = std::get_if<gate::FT>(&n.gate); f && f->n > qcore::kMaxDenseFT) {
            if (static_cast<int64_t>(t.size()) != f->n) {
                throw Error(ErrorCode::E_DIM_MISMATCH, "FT(" + std::to_string(f->n) + ") applied to " +
                                                           std::to_string(t.size()) + " qbit(s)", pos);
            }
            GateOp h{"H", qcore::hadamard()};
            for (int q : t) {
                ports.quantum->apply(h, std::span<const int>(&q, 1));
            }
            return;
        }
        ports.quantum->apply(gate_op(n.gate, static_cast<int>(t.size()), pos), t);
    }

    void exec_dump(const stmt::Dump &n, SourcePos pos) {
        std::vector<int> t = targets(n.vars, pos);
        auto entries = ports.quantum->spectrum(t);
        int width = static_cast<int>(t.size());
        if (ports.output) {
            ports.output->dump(name, entries, width);
        }
        std::string text = qcore::format_spectrum(entries, width);
        if (open_line) {
            std::string line = *open_line + " " + text;
            open_line.reset();
            emit(line);
        } else {
            emit(text);
        }
    }

    void exec_call(const stmt::ProcCall &n, SourcePos pos) {
        auto *ref = std::get_if<ProcRef>(&require(n.name, pos));
        if (!ref) {
            throw Error(ErrorCode::E_UNKNOWN_PROC, "'" + n.name + "' is not a procedure", pos);
        }
        ProcRef proc = *ref;
        const auto &params = proc->decl->params;
        if (params.size() != n.args.size()) {
            throw Error(ErrorCode::E_ARITY, "'" + n.name + "' expects " + std::to_string(params.size()) +
                                                " argument(s)", pos);
        }
        if (static_cast<int>(frames.size()) > config.recursion_limit) {
            throw Error(ErrorCode::E_RECURSION_LIMIT,
                        "call depth exceeds the recursion limit of " + std::to_string(config.recursion_limit), pos);
        }
        Scope param_scope;
        std::vector<std::string> classical_params;
        for (size_t i = 0; i < params.size(); i++) {
            const syntax::Binding &p = params[i];
            if (types::signature_of(p.type).quantum()) {
                const auto *ref_expr = std::get_if<VarRef>(&n.args[i]->node);
                if (!ref_expr) {
                    throw Error(ErrorCode::E_ARG_TYPE, "quantum argument must be a variable", n.args[i]->pos);
                }
                const QuantumVar &q = quantum_var(ref_expr->name, n.args[i]->pos);
                param_scope.vars.insert_or_assign(p.name, QuantumVar{q.indices, p.type, true});
            } else {
                ClassicalValue v = eval(*n.args[i]).coerce_to(p.type);
                param_scope.vars.insert_or_assign(p.name, ClassicalVar{v, p.type});
                classical_params.push_back(p.name);
            }
        }
        Scope proc_scope;
        for (const auto &[pn, pr] : proc->env) {
            proc_scope.vars.insert_or_assign(pn, pr);
        }
        proc_scope.vars.insert_or_assign(proc->decl->name, proc);

        tasks.push_back(ReturnTask{n.results, std::move(classical_params)});
        tasks.push_back(PopScopeTask{});
        tasks.push_back(SeqTask{&proc->decl->body, 0});
        frames.push_back(Frame{{std::move(proc_scope), std::move(param_scope), Scope{}}});
    }

    void do_return(const ReturnTask &r) {
        Frame done = std::move(frames.back());
        frames.pop_back();
        // scopes: procs, params (body scope already popped)
        Scope &params = done.scopes.back();
        release_owned(params);
        std::vector<ClassicalValue> values;
        for (const auto &n : r.classical_params) {
            values.push_back(std::get<ClassicalVar>(params.vars.at(n)).value);
        }
        if (r.results) {
            for (size_t i = 0; i < r.results->size() && i < values.size(); i++) {
                ClassicalVar &dst = classical_var((*r.results)[i], {});
                dst.value = values[i].coerce_to(dst.type);
            }
        }
    }

    void exec_send(const stmt::Send &n, SourcePos pos) {
        std::vector<Item> items;
        for (const auto &v : n.vars) {
            Entry &b = require(v, pos);
            if (auto *c = std::get_if<ClassicalVar>(&b)) {
                items.push_back(Item{types::signature_of(c->type), c->value});
            } else if (auto *q = std::get_if<QuantumVar>(&b)) {
                if (q->borrowed) {
                    throw Error(ErrorCode::E_SEND_BORROWED, "cannot send borrowed parameter '" + v + "'", pos);
                }
                items.push_back(Item{types::signature_of(q->type), q->indices});
            } else {
                throw Error(ErrorCode::E_NOT_CLASSICAL, "cannot send procedure '" + v + "'", pos);
            }
        }
        // quantum bindings leave the sender's scopes
        for (const auto &v : n.vars) {
            auto &scopes = frame().scopes;
            for (auto it = scopes.rbegin(); it != scopes.rend(); ++it) {
                auto f = it->vars.find(v);
                if (f != it->vars.end()) {
                    if (std::holds_alternative<QuantumVar>(f->second)) {
                        it->vars.erase(f);
                        std::erase(it->owned, v);
                    }
                    break;
                }
            }
        }
        ports.channels->send(name, n.dest, std::move(items));
    }

    bool exec_receive(const stmt::Receive &n, SourcePos pos) {
        std::vector<types::TypeSignature> expected;
        for (const auto &b : n.bindings) {
            expected.push_back(types::signature_of(b.type));
        }
        std::optional<std::vector<Item>> got;
        try {
            got = ports.channels->try_receive(n.source, name, expected);
        } catch (Error &e) {
            throw Error(e.code(), e.what(), e.pos().valid() ? e.pos() : pos);
        }
        if (!got) {
            return false;
        }
        for (size_t i = 0; i < n.bindings.size(); i++) {
            const auto &b = n.bindings[i];
            Item &item = (*got)[i];
            if (auto *idx = std::get_if<std::vector<int>>(&item.payload)) {
                bind(b.name, QuantumVar{*idx, b.type, false});
            } else {
                bind(b.name, ClassicalVar{std::get<ClassicalValue>(item.payload).coerce_to(b.type), b.type});
            }
        }
        return true;
    }

    /// Executes one statement. Returns false if it must be retried later.
    bool exec(const Stmt &s) {
        const SourcePos pos = s.pos;
        return std::visit(
            overloaded{
                [&](const stmt::Allocate &n) {
                    if (types::signature_of(n.type).quantum()) {
                        ClassicalValue init = eval(*n.init);
                        if (init.is_float() || (init.as_int() != 0 && init.as_int() != 1)) {
                            throw Error(ErrorCode::E_BAD_INIT, "quantum initializer must be 0 or 1", pos);
                        }
                        int w = width_of(n.type);
                        uint64_t pattern = init.as_int() ? (w >= 64 ? ~uint64_t{0} : (uint64_t{1} << w) - 1) : 0;
                        std::vector<int> idx = ports.quantum->alloc(w, pattern);
                        bind(n.name, QuantumVar{std::move(idx), n.type, false});
                    } else {
                        bind(n.name, ClassicalVar{eval(*n.init).coerce_to(n.type), n.type});
                    }
                    return true;
                },
                [&](const stmt::Assign &n) {
                    ClassicalValue v = eval(*n.value);
                    ClassicalVar &dst = classical_var(n.name, pos);
                    dst.value = v.coerce_to(dst.type);
                    return true;
                },
                [&](const stmt::AssignMeasure &n) {
                    std::vector<int> t = quantum_var(n.source, pos).indices;
                    uint64_t outcome = ports.quantum->measure(t);
                    ClassicalVar &dst = classical_var(n.target, pos);
                    dst.value = (dst.type == VarType::Bit ? ClassicalValue::bit(outcome != 0)
                                                          : ClassicalValue::integer(static_cast<int64_t>(outcome)))
                                    .coerce_to(dst.type);
                    return true;
                },
                [&](const stmt::MeasureBranch &n) {
                    std::vector<int> t = quantum_var(n.qvar, pos).indices;
                    uint64_t outcome = ports.quantum->measure(t);
                    push_branch(outcome != 0 ? n.then_branch.get() : n.else_branch.get());
                    return true;
                },
                [&](const stmt::If &n) {
                    if (eval(*n.cond).truthy()) {
                        push_branch(n.then_branch.get());
                    } else if (n.else_branch) {
                        push_branch(n.else_branch.get());
                    }
                    return true;
                },
                [&](const stmt::While &n) {
                    tasks.push_back(LoopTask{&n, s.pos});
                    return true;
                },
                [&](const stmt::GateApply &n) {
                    exec_gate(n, pos);
                    return true;
                },
                [&](const stmt::Send &n) {
                    exec_send(n, pos);
                    return true;
                },
                [&](const stmt::Receive &n) { return exec_receive(n, pos); },
                [&](const stmt::ProcDecl &n) {
                    push_scope();
                    auto closure = std::make_shared<ProcClosure>(ProcClosure{&n, visible_procs()});
                    bind(n.name, ProcRef(closure));
                    tasks.push_back(PopScopeTask{});
                    tasks.push_back(SingleTask{n.in.get()});
                    return true;
                },
                [&](const stmt::ProcCall &n) {
                    exec_call(n, pos);
                    return true;
                },
                [&](const stmt::Print &n) {
                    flush_line();
                    if (auto *text = std::get_if<std::string>(&n.what)) {
                        open_line = *text;
                    } else {
                        open_line = eval(*std::get<ExprPtr>(n.what)).to_string();
                    }
                    return true;
                },
                [&](const stmt::Dump &n) {
                    exec_dump(n, pos);
                    return true;
                },
                [&](const stmt::Skip &) { return true; },
                [&](const stmt::Block &n) {
                    push_scope();
                    tasks.push_back(PopScopeTask{});
                    tasks.push_back(SeqTask{&n.body, 0});
                    return true;
                },
            },
            s.node);
    }

    /// Runs control tasks until one statement (or loop test) has executed.
    /// Returns false when the statement blocked; sets `finished` at the end.
    bool step(bool &finished, std::string &blocked_on) {
        while (!tasks.empty()) {
            Task &top = tasks.back();
            if (auto *seq = std::get_if<SeqTask>(&top)) {
                if (seq->index >= seq->list->size()) {
                    tasks.pop_back();
                    continue;
                }
                const Stmt &s = *(*seq->list)[seq->index];
                seq->index++;
                size_t depth = tasks.size();
                if (!run_stmt(s, blocked_on)) {
                    // nothing was pushed by a blocked receive
                    std::get<SeqTask>(tasks[depth - 1]).index--;
                    return false;
                }
                return true;
            }
            if (auto *single = std::get_if<SingleTask>(&top)) {
                const Stmt *s = single->stmt;
                tasks.pop_back();
                if (!run_stmt(*s, blocked_on)) {
                    tasks.push_back(SingleTask{s});
                    return false;
                }
                return true;
            }
            if (auto *loop = std::get_if<LoopTask>(&top)) {
                const stmt::While *w = loop->loop;
                last_pos = loop->pos;
                if (eval(*w->cond).truthy()) {
                    push_branch(w->body.get());
                } else {
                    tasks.pop_back();
                }
                return true;
            }
            if (std::holds_alternative<PopScopeTask>(top)) {
                tasks.pop_back();
                pop_scope();
                continue;
            }
            ReturnTask ret = std::move(std::get<ReturnTask>(top));
            tasks.pop_back();
            do_return(ret);
        }
        // module end: release everything still owned
        while (!frames.empty() && !frame().scopes.empty()) {
            pop_scope(true);
        }
        flush_line();
        finished = true;
        return true;
    }

    bool run_stmt(const Stmt &s, std::string &blocked_on) {
        last_pos = s.pos;
        try {
            if (!exec(s)) {
                blocked_on = std::get<stmt::Receive>(s.node).source;
                return false;
            }
            return true;
        } catch (Error &e) {
            if (!e.pos().valid()) {
                throw Error(e.code(), e.what(), s.pos);
            }
            throw;
        }
    }

    std::vector<std::vector<int>> owned() const {
        std::vector<std::vector<int>> out;
        for (const auto &f : frames) {
            for (const auto &s : f.scopes) {
                for (const auto &[n, b] : s.vars) {
                    if (auto *q = std::get_if<QuantumVar>(&b); q && !q->borrowed) {
                        out.push_back(q->indices);
                    }
                }
            }
        }
        return out;
    }
};

Machine::Machine(std::string name, const StmtList &body, Ports ports, MachineConfig config)
    : name_(name), impl_(std::make_unique<Impl>(std::move(name), body, ports, config)) {
}

Machine::~Machine() = default;
Machine::Machine(Machine &&) noexcept = default;
Machine &Machine::operator=(Machine &&) noexcept = default;

ExecStatus Machine::step() {
    if (status_.done()) {
        return status_;
    }
    bool finished = false;
    std::string blocked_on;
    try {
        bool progressed = impl_->step(finished, blocked_on);
        if (!progressed) {
            status_.state = ExecStatus::State::BlockedOnReceive;
            status_.channel = blocked_on;
        } else {
            status_.state = finished ? ExecStatus::State::Finished : ExecStatus::State::Running;
            status_.channel.clear();
        }
    } catch (Error &e) {
        impl_->flush_line();
        status_.state = ExecStatus::State::Failed;
        status_.error = e;
    } catch (std::exception &e) {
        impl_->flush_line();
        status_.state = ExecStatus::State::Failed;
        status_.error = Error(ErrorCode::E_INTERNAL, e.what());
    }
    return status_;
}

ExecStatus Machine::run() {
    while (step().state == ExecStatus::State::Running) {
    }
    return status_;
}

SourcePos Machine::last_pos() const {
    return impl_->last_pos;
}

std::vector<std::vector<int>> Machine::owned_quantum() const {
    return impl_->owned();
}

}  // namespace cqpl::interp
