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

#include "cqpl/types/comm_balance.h"

#include <deque>
#include <map>

#include "cqpl/interp/machine.h"

namespace cqpl::types {

using namespace syntax;
using interp::ClassicalValue;

namespace {

constexpr int kMaxUnroll = 10000;

struct NotReducible {};

struct CommOp {
    bool send;
    std::string peer;
    std::vector<TypeSignature> items;
    SourcePos pos;
};

struct Var {
    VarType type;
    std::optional<ClassicalValue> value;
};

bool has_comm(const Stmt &s);

bool list_has_comm(const StmtList &list) {
    for (const auto &s : list) {
        if (has_comm(*s)) {
            return true;
        }
    }
    return false;
}

bool has_comm(const Stmt &s) {
    return std::visit(
        [](const auto &n) -> bool {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, stmt::Send> || std::is_same_v<T, stmt::Receive> ||
                          std::is_same_v<T, stmt::ProcCall>) {
                return true;
            } else if constexpr (std::is_same_v<T, stmt::If> || std::is_same_v<T, stmt::MeasureBranch>) {
                return has_comm(*n.then_branch) || (n.else_branch && has_comm(*n.else_branch));
            } else if constexpr (std::is_same_v<T, stmt::While>) {
                return has_comm(*n.body);
            } else if constexpr (std::is_same_v<T, stmt::Block>) {
                return list_has_comm(n.body);
            } else if constexpr (std::is_same_v<T, stmt::ProcDecl>) {
                return has_comm(*n.in);
            } else {
                return false;
            }
        },
        s.node);
}

/// Collects the assigned names of a communication-free subtree.
void assigned_names(const Stmt &s, std::vector<std::string> &out) {
    std::visit(
        [&](const auto &n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, stmt::Assign>) {
                out.push_back(n.name);
            } else if constexpr (std::is_same_v<T, stmt::AssignMeasure>) {
                out.push_back(n.target);
            } else if constexpr (std::is_same_v<T, stmt::If> || std::is_same_v<T, stmt::MeasureBranch>) {
                assigned_names(*n.then_branch, out);
                if (n.else_branch) {
                    assigned_names(*n.else_branch, out);
                }
            } else if constexpr (std::is_same_v<T, stmt::While>) {
                assigned_names(*n.body, out);
            } else if constexpr (std::is_same_v<T, stmt::Block>) {
                for (const auto &c : n.body) {
                    assigned_names(*c, out);
                }
            } else if constexpr (std::is_same_v<T, stmt::ProcCall>) {
                if (n.results) {
                    out.insert(out.end(), n.results->begin(), n.results->end());
                }
            }
        },
        s.node);
}

class Reducer {
   public:
    std::vector<CommOp> run(const StmtList &body) {
        scopes_.emplace_back();
        list(body);
        return std::move(ops_);
    }

   private:
    Var *find(const std::string &name) {
        for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
            auto f = it->find(name);
            if (f != it->end()) {
                return &f->second;
            }
        }
        return nullptr;
    }

    std::optional<ClassicalValue> constant(const Expr &e) {
        struct Unknown {};
        try {
            return interp::eval_expr(e, [&](const std::string &name, SourcePos) -> ClassicalValue {
                Var *v = find(name);
                if (!v || !v->value) {
                    throw Unknown{};
                }
                return *v->value;
            });
        } catch (const Unknown &) {
            return std::nullopt;
        } catch (const Error &) {
            return std::nullopt;
        }
    }

    void forget(const Stmt &s) {
        std::vector<std::string> names;
        assigned_names(s, names);
        for (const auto &n : names) {
            if (Var *v = find(n)) {
                v->value.reset();
            }
        }
    }

    void scoped(const Stmt &s) {
        scopes_.emplace_back();
        stmt(s);
        scopes_.pop_back();
    }

    void list(const StmtList &body) {
        for (const auto &s : body) {
            stmt(*s);
        }
    }

    void stmt(const Stmt &s) {
        std::visit(
            [&](const auto &n) {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, stmt::Allocate>) {
                    Var v{n.type, std::nullopt};
                    if (signature_of(n.type).classical()) {
                        if (auto c = constant(*n.init)) {
                            try {
                                v.value = c->coerce_to(n.type);
                            } catch (const Error &) {
                            }
                        }
                    }
                    scopes_.back()[n.name] = v;
                } else if constexpr (std::is_same_v<T, stmt::Assign>) {
                    if (Var *v = find(n.name)) {
                        auto c = constant(*n.value);
                        v->value.reset();
                        if (c) {
                            try {
                                v->value = c->coerce_to(v->type);
                            } catch (const Error &) {
                            }
                        }
                    }
                } else if constexpr (std::is_same_v<T, stmt::AssignMeasure>) {
                    if (Var *v = find(n.target)) {
                        v->value.reset();
                    }
                } else if constexpr (std::is_same_v<T, stmt::If>) {
                    auto c = constant(*n.cond);
                    if (c) {
                        if (c->truthy()) {
                            scoped(*n.then_branch);
                        } else if (n.else_branch) {
                            scoped(*n.else_branch);
                        }
                    } else if (has_comm(s)) {
                        throw NotReducible{};
                    } else {
                        forget(s);
                    }
                } else if constexpr (std::is_same_v<T, stmt::MeasureBranch>) {
                    if (has_comm(s)) {
                        throw NotReducible{};
                    }
                    forget(s);
                } else if constexpr (std::is_same_v<T, stmt::While>) {
                    if (!has_comm(s)) {
                        forget(s);
                        return;
                    }
                    for (int i = 0;; i++) {
                        auto c = constant(*n.cond);
                        if (!c || i >= kMaxUnroll) {
                            throw NotReducible{};
                        }
                        if (!c->truthy()) {
                            break;
                        }
                        scoped(*n.body);
                    }
                } else if constexpr (std::is_same_v<T, stmt::Send>) {
                    CommOp op{true, n.dest, {}, s.pos};
                    for (const auto &name : n.vars) {
                        Var *v = find(name);
                        if (!v) {
                            throw NotReducible{};
                        }
                        op.items.push_back(signature_of(v->type));
                    }
                    ops_.push_back(std::move(op));
                } else if constexpr (std::is_same_v<T, stmt::Receive>) {
                    CommOp op{false, n.source, {}, s.pos};
                    for (const auto &b : n.bindings) {
                        op.items.push_back(signature_of(b.type));
                        scopes_.back()[b.name] = Var{b.type, std::nullopt};
                    }
                    ops_.push_back(std::move(op));
                } else if constexpr (std::is_same_v<T, stmt::ProcDecl>) {
                    if (list_has_comm(n.body)) {
                        throw NotReducible{};
                    }
                    stmt(*n.in);
                } else if constexpr (std::is_same_v<T, stmt::ProcCall>) {
                    // bodies with communication were rejected at the declaration
                    forget(s);
                } else if constexpr (std::is_same_v<T, stmt::Block>) {
                    scopes_.emplace_back();
                    list(n.body);
                    scopes_.pop_back();
                }
            },
            s.node);
    }

    std::vector<std::map<std::string, Var>> scopes_;
    std::vector<CommOp> ops_;
};

std::string sig_list(const std::vector<TypeSignature> &sigs) {
    std::string s;
    for (size_t i = 0; i < sigs.size(); i++) {
        s += (i ? ", " : "") + to_string(sigs[i]);
    }
    return s;
}

BalanceResult imbalanced(SourcePos pos, std::string message) {
    Diagnostic d = make_diagnostic(ErrorCode::W_COMM_IMBALANCE, pos, std::move(message));
    return BalanceResult{BalanceResult::Verdict::Imbalanced, d};
}

}  // namespace

BalanceResult comm_balance_check(const Program &program) {
    if (!program.is_modular()) {
        return {BalanceResult::Verdict::Balanced, std::nullopt};
    }
    std::vector<std::string> names;
    std::vector<std::vector<CommOp>> ops;
    try {
        for (const auto &m : program.modules) {
            names.push_back(m.name);
            ops.push_back(Reducer().run(m.body));
        }
    } catch (const NotReducible &) {
        return {BalanceResult::Verdict::Unknown, std::nullopt};
    }

    struct Queued {
        TypeSignature type;
        SourcePos pos;
    };
    std::map<std::pair<std::string, std::string>, std::deque<Queued>> fifo;
    std::vector<size_t> next(ops.size(), 0);
    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (size_t m = 0; m < ops.size(); m++) {
            while (next[m] < ops[m].size()) {
                const CommOp &op = ops[m][next[m]];
                if (op.send) {
                    auto &q = fifo[{names[m], op.peer}];
                    for (const auto &t : op.items) {
                        q.push_back({t, op.pos});
                    }
                } else {
                    auto &q = fifo[{op.peer, names[m]}];
                    if (q.size() < op.items.size()) {
                        break;
                    }
                    for (const auto &t : op.items) {
                        if (!type_equiv(q.front().type, t)) {
                            return imbalanced(op.pos, "module " + names[m] + " receives " + to_string(t) +
                                                          " from " + op.peer + " but " + to_string(q.front().type) +
                                                          " is sent");
                        }
                        q.pop_front();
                    }
                }
                next[m]++;
                progressed = true;
            }
        }
    }
    for (size_t m = 0; m < ops.size(); m++) {
        if (next[m] < ops[m].size()) {
            const CommOp &op = ops[m][next[m]];
            return imbalanced(op.pos, "module " + names[m] + " waits forever on channel " + op.peer + " -> " +
                                          names[m] + " for (" + sig_list(op.items) + ")");
        }
    }
    for (const auto &[key, q] : fifo) {
        if (!q.empty()) {
            return imbalanced(q.front().pos, std::to_string(q.size()) + " item(s) sent from " + key.first + " to " +
                                                 key.second + " are never received");
        }
    }
    return {BalanceResult::Verdict::Balanced, std::nullopt};
}

}  // namespace cqpl::types
