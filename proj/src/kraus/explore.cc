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

#include "cqpl/kraus/explore.h"

#include <algorithm>
#include <map>
#include <set>

#include "cqpl/comm/channel.h"
#include "cqpl/comm/scheduler.h"
#include "cqpl/interp/machine.h"

namespace cqpl::kraus {

namespace {

using interp::ClassicalValue;
using interp::Item;
using types::TypeSignature;

constexpr double kPrune = 1e-12;

struct Choice {
    element::BranchSum::Kind kind;
    std::vector<int> positions;
    std::string peer;
    uint64_t value;
    std::string module;
};

using Event = std::variant<Element, Choice>;

/// Choice script for one replay. Choices past the forced prefix take the
/// first option and queue the alternatives.
class Script {
   public:
    Script(std::vector<size_t> forced, std::vector<std::vector<size_t>> &pending)
        : forced_(std::move(forced)), pending_(pending) {
    }

    size_t choose(size_t options) {
        if (cursor_ < forced_.size()) {
            return forced_[cursor_++];
        }
        for (size_t k = options; k-- > 1;) {
            std::vector<size_t> alt = forced_;
            alt.push_back(k);
            pending_.push_back(std::move(alt));
        }
        forced_.push_back(0);
        cursor_++;
        return 0;
    }

   private:
    std::vector<size_t> forced_;
    std::vector<std::vector<size_t>> &pending_;
    size_t cursor_ = 0;
};

struct Run {
    std::vector<Event> events;
};

void record(Run &run, Element::Node node, const std::string &module) {
    run.events.emplace_back(Element{std::move(node), module});
}

std::vector<std::string> classical_values(const std::vector<Item> &items) {
    std::vector<std::string> out;
    for (const auto &item : items) {
        if (auto *v = std::get_if<ClassicalValue>(&item.payload)) {
            out.push_back(v->to_string());
        }
    }
    return out;
}

std::vector<int> quantum_positions(const std::vector<Item> &items) {
    std::vector<int> out;
    for (const auto &item : items) {
        if (auto *q = std::get_if<std::vector<int>>(&item.payload)) {
            out.insert(out.end(), q->begin(), q->end());
        }
    }
    return out;
}

void check_measure_width(size_t k, const ExploreOptions &options) {
    if (static_cast<int>(k) > options.max_measure_width) {
        throw Error(ErrorCode::E_TOO_LARGE, "measurement of " + std::to_string(k) + " qbits has too many outcomes");
    }
}

bool fatal_for_exploration(ErrorCode code) {
    return code == ErrorCode::E_UNBOUNDED || code == ErrorCode::E_TOO_LARGE || code == ErrorCode::E_RECURSION_LIMIT ||
           code == ErrorCode::E_STEP_LIMIT;
}

[[noreturn]] void rethrow_unbounded(const Error &e, SourcePos fallback) {
    SourcePos pos = e.pos().valid() ? e.pos() : fallback;
    if (e.code() == ErrorCode::E_RECURSION_LIMIT || e.code() == ErrorCode::E_STEP_LIMIT) {
        throw Error(ErrorCode::E_UNBOUNDED, std::string("not boundedly unrollable: ") + e.what(), pos);
    }
    throw Error(e.code(), e.what(), pos);
}

// --- isolated recording -----------------------------------------------------

class IsolatedPorts : public interp::QuantumPort, public interp::ChannelPort, public interp::OutputPort {
   public:
    IsolatedPorts(std::string module, Run &run, Script &script, const ExploreOptions &options)
        : module_(std::move(module)), run_(run), script_(script), options_(options) {
    }

    std::vector<int> alloc(int n, uint64_t pattern) override {
        std::vector<int> pos = fresh(n);
        record(run_, element::Create{pos, pattern}, module_);
        return pos;
    }
    void apply(const interp::GateOp &op, std::span<const int> targets) override {
        record(run_, element::Gate{op.label, op.matrix, {targets.begin(), targets.end()}}, module_);
    }
    uint64_t measure(std::span<const int> targets) override {
        check_measure_width(targets.size(), options_);
        std::vector<int> pos(targets.begin(), targets.end());
        uint64_t value = script_.choose(size_t{1} << targets.size());
        run_.events.emplace_back(Choice{element::BranchSum::Kind::Measure, pos, "", value, module_});
        record(run_, element::Project{value, pos}, module_);
        return value;
    }
    std::vector<qcore::SpectrumEntry> spectrum(std::span<const int>) override {
        return {};
    }
    void release(std::span<const int> targets, bool module_exit) override {
        if (!module_exit) {
            record(run_, element::Discard{{targets.begin(), targets.end()}}, module_);
        }
    }

    void send(const std::string &, const std::string &to, std::vector<Item> items) override {
        record(run_, element::Send{to, quantum_positions(items), classical_values(items)}, module_);
    }
    std::optional<std::vector<Item>> try_receive(const std::string &from, const std::string &,
                                                 std::span<const TypeSignature> expected) override {
        std::vector<Item> items;
        for (const auto &sig : expected) {
            if (sig.quantum()) {
                items.push_back(Item{sig, fresh(sig.width)});
                continue;
            }
            if (sig.is_float || sig.width > 8) {
                throw Error(ErrorCode::E_UNBOUNDED, "cannot enumerate a received " + types::to_string(sig) +
                                                        " value from '" + from + "'");
            }
            uint64_t value = script_.choose(size_t{1} << sig.width);
            run_.events.emplace_back(Choice{element::BranchSum::Kind::Receive, {}, from, value, module_});
            ClassicalValue v = sig.width == 1 ? ClassicalValue::bit(value != 0)
                                              : ClassicalValue::integer(static_cast<int64_t>(value));
            items.push_back(Item{sig, v});
        }
        record(run_, element::Receive{from, quantum_positions(items), classical_values(items)}, module_);
        return items;
    }

    void line(const std::string &, const std::string &text) override {
        record(run_, element::Output{text}, module_);
    }

   private:
    std::vector<int> fresh(int n) {
        std::vector<int> pos;
        for (int i = 0; i < n; i++) {
            pos.push_back(next_++);
        }
        return pos;
    }

    std::string module_;
    Run &run_;
    Script &script_;
    const ExploreOptions &options_;
    int next_ = 0;
};

// --- whole-program recording ------------------------------------------------

/// Pure-state simulator shared by all modules of one replay. Qbits are never
/// removed, so positions equal simulator indices.
struct SharedSim {
    qcore::QuantumState state;
    comm::ChannelSet channels;

    SharedSim(int sim_cap, std::set<std::string> modules)
        : state(1 << 20, sim_cap), channels(std::move(modules)) {
    }
};

class GlobalPorts : public interp::QuantumPort, public interp::ChannelPort, public interp::OutputPort {
   public:
    GlobalPorts(std::string module, SharedSim &sim, Run &run, Script &script, const ExploreOptions &options)
        : module_(std::move(module)), sim_(sim), run_(run), script_(script), options_(options) {
    }

    std::vector<int> alloc(int n, uint64_t pattern) override {
        std::vector<int> pos;
        try {
            pos = sim_.state.alloc(n, pattern);
        } catch (const Error &e) {
            if (e.code() == ErrorCode::E_SIM_CAP) {
                throw Error(ErrorCode::E_TOO_LARGE, e.what());
            }
            throw;
        }
        record(run_, element::Create{pos, pattern}, module_);
        return pos;
    }
    void apply(const interp::GateOp &op, std::span<const int> targets) override {
        sim_.state.apply(op.matrix, targets);
        record(run_, element::Gate{op.label, op.matrix, {targets.begin(), targets.end()}}, module_);
    }
    uint64_t measure(std::span<const int> targets) override {
        check_measure_width(targets.size(), options_);
        std::vector<uint64_t> options;
        for (uint64_t v = 0; v < (uint64_t{1} << targets.size()); v++) {
            if (sim_.state.probability(targets, v) > kPrune) {
                options.push_back(v);
            }
        }
        uint64_t value = options.at(script_.choose(options.size()));
        sim_.state.collapse(targets, value);
        std::vector<int> pos(targets.begin(), targets.end());
        run_.events.emplace_back(Choice{element::BranchSum::Kind::Measure, pos, "", value, module_});
        record(run_, element::Project{value, pos}, module_);
        return value;
    }
    std::vector<qcore::SpectrumEntry> spectrum(std::span<const int> targets) override {
        return sim_.state.spectrum(targets);
    }
    void release(std::span<const int> targets, bool module_exit) override {
        if (!module_exit) {
            record(run_, element::Discard{{targets.begin(), targets.end()}}, module_);
        }
    }

    void send(const std::string &from, const std::string &to, std::vector<Item> items) override {
        std::vector<int> pos = quantum_positions(items);
        std::vector<std::string> values = classical_values(items);
        sim_.channels.send(from, to, std::move(items));
        record(run_, element::Send{to, std::move(pos), std::move(values)}, module_);
    }
    std::optional<std::vector<Item>> try_receive(const std::string &from, const std::string &to,
                                                 std::span<const TypeSignature> expected) override {
        auto got = sim_.channels.try_receive(from, to, expected);
        if (got) {
            record(run_, element::Receive{from, quantum_positions(*got), classical_values(*got)}, module_);
        }
        return got;
    }

    void line(const std::string &, const std::string &text) override {
        record(run_, element::Output{text}, module_);
    }

   private:
    std::string module_;
    SharedSim &sim_;
    Run &run_;
    Script &script_;
    const ExploreOptions &options_;
};

// --- merging replays into a tree ------------------------------------------------

struct Cursor {
    const Run *run;
    size_t offset;
};

Aggregation build(const std::vector<Cursor> &group, int &next_id) {
    Aggregation out;
    const Run &first = *group.front().run;
    size_t i = group.front().offset;
    for (; i < first.events.size(); i++) {
        if (std::holds_alternative<Choice>(first.events[i])) {
            break;
        }
        out.push_back(std::get<Element>(first.events[i]));
    }
    if (i == first.events.size()) {
        return out;
    }
    const size_t delta = i - group.front().offset;
    const Choice &c = std::get<Choice>(first.events[i]);
    element::BranchSum sum;
    sum.id = "#" + std::to_string(next_id++);
    sum.kind = c.kind;
    sum.positions = c.positions;
    sum.peer = c.peer;
    std::map<uint64_t, std::vector<Cursor>> by_value;
    for (const auto &cur : group) {
        const auto &choice = std::get<Choice>(cur.run->events.at(cur.offset + delta));
        by_value[choice.value].push_back(Cursor{cur.run, cur.offset + delta + 1});
    }
    for (const auto &[value, sub] : by_value) {
        sum.branches.push_back(element::Branch{value, build(sub, next_id)});
    }
    out.push_back(Element{std::move(sum), c.module});
    return out;
}

/// Replays `once` under every choice script until all paths are covered.
template <class F>
Aggregation explore(const ExploreOptions &options, F once) {
    std::vector<std::vector<size_t>> pending{{}};
    std::vector<Run> runs;
    while (!pending.empty()) {
        if (static_cast<int>(runs.size()) >= options.max_leaves) {
            throw Error(ErrorCode::E_TOO_LARGE,
                        "more than " + std::to_string(options.max_leaves) + " execution paths");
        }
        std::vector<size_t> forced = std::move(pending.back());
        pending.pop_back();
        Script script(std::move(forced), pending);
        runs.emplace_back();
        once(runs.back(), script);
    }
    std::vector<Cursor> all;
    for (const auto &r : runs) {
        all.push_back(Cursor{&r, 0});
    }
    int next_id = 1;
    return build(all, next_id);
}

}  // namespace

Aggregation explore_module(const std::string &name, const syntax::StmtList &body, const ExploreOptions &options) {
    return explore(options, [&](Run &run, Script &script) {
        IsolatedPorts ports(name, run, script, options);
        interp::Machine m(name, body, interp::Ports{&ports, &ports, &ports},
                          interp::MachineConfig{options.recursion_limit});
        uint64_t steps = 0;
        while (m.step().state == interp::ExecStatus::State::Running) {
            if (++steps > options.max_steps) {
                throw Error(ErrorCode::E_UNBOUNDED,
                            "module '" + name + "' exceeds " + std::to_string(options.max_steps) +
                                " steps on one path; loop or recursion is not boundedly unrollable",
                            m.last_pos());
            }
        }
        const auto &st = m.status();
        if (st.state == interp::ExecStatus::State::Failed) {
            if (fatal_for_exploration(st.error->code())) {
                rethrow_unbounded(*st.error, m.last_pos());
            }
            record(run, element::Abort{st.error->code(), st.error->what()}, name);
        }
    });
}

Aggregation explore_global(const syntax::Program &program, const ExploreOptions &options) {
    std::set<std::string> names;
    for (const auto &m : program.modules) {
        names.insert(m.name);
    }
    return explore(options, [&](Run &run, Script &script) {
        SharedSim sim(options.sim_cap, names);
        std::map<std::string, std::unique_ptr<GlobalPorts>> ports;
        comm::RunOptions ro;
        ro.max_steps = options.max_steps;
        ro.recursion_limit = options.recursion_limit;
        ro.check_ownership = false;
        comm::RunResult result = comm::run_with_ports(program, ro, [&](const std::string &module) {
            auto &p = ports[module];
            p = std::make_unique<GlobalPorts>(module, sim, run, script, options);
            return interp::Ports{p.get(), p.get(), p.get()};
        });
        if (result.ok()) {
            return;
        }
        const Error &e = *result.error;
        if (fatal_for_exploration(e.code())) {
            rethrow_unbounded(e, e.pos());
        }
        record(run, element::Abort{e.code(), e.what()}, result.failed_module);
    });
}

}  // namespace cqpl::kraus
