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

#include "cqpl/comm/scheduler.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace cqpl::comm {

namespace {

std::set<std::string> module_names(const syntax::Program &program) {
    std::set<std::string> names;
    for (const auto &m : program.modules) {
        names.insert(m.name);
    }
    return names;
}

std::string deadlock_message(const std::vector<interp::Machine> &machines) {
    std::string msg = "deadlock:";
    bool first = true;
    for (const auto &m : machines) {
        if (m.status().state != interp::ExecStatus::State::BlockedOnReceive) {
            continue;
        }
        msg += first ? " " : "; ";
        msg += "module " + m.name() + " waits on channel " + m.status().channel + " -> " + m.name();
        first = false;
    }
    return msg;
}

}  // namespace

RunResult run_with_ports(const syntax::Program &program, const RunOptions &options, const PortFactory &ports,
                         const StepHook &after_step) {
    interp::MachineConfig config{options.recursion_limit};
    std::vector<interp::Machine> machines;
    if (program.is_modular()) {
        for (const auto &m : program.modules) {
            machines.emplace_back(m.name, m.body, ports(m.name), config);
        }
    } else {
        machines.emplace_back(kMainModule, program.statements, ports(kMainModule), config);
    }

    RunResult result;
    std::mt19937_64 order_rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<size_t> order(machines.size());
    std::iota(order.begin(), order.end(), 0);

    auto finish = [&]() {
        for (const auto &m : machines) {
            result.modules.push_back({m.name(), m.status()});
        }
        return result;
    };

    while (true) {
        bool all_done = std::all_of(machines.begin(), machines.end(), [](const auto &m) { return m.status().done(); });
        if (all_done) {
            return finish();
        }
        if (options.interleave == Interleave::Random) {
            std::shuffle(order.begin(), order.end(), order_rng);
        }
        bool progressed = false;
        for (size_t i : order) {
            interp::Machine &m = machines[i];
            if (m.status().done()) {
                continue;
            }
            interp::ExecStatus st = m.step();
            if (st.state == interp::ExecStatus::State::Failed) {
                result.error = st.error;
                result.failed_module = m.name();
                return finish();
            }
            if (st.state == interp::ExecStatus::State::BlockedOnReceive) {
                continue;
            }
            progressed = true;
            result.steps++;
            if (options.trace) {
                SourcePos pos = m.last_pos();
                *options.trace << "[" << m.name() << "] " << pos.line << ":" << pos.column << "\n";
            }
            if (after_step) {
                try {
                    after_step(machines);
                } catch (const Error &e) {
                    result.error = e;
                    result.failed_module = m.name();
                    return finish();
                }
            }
            if (options.max_steps != 0 && result.steps >= options.max_steps &&
                !std::all_of(machines.begin(), machines.end(), [](const auto &mm) { return mm.status().done(); })) {
                result.error = Error(ErrorCode::E_STEP_LIMIT,
                                     "step limit of " + std::to_string(options.max_steps) + " reached");
                return finish();
            }
        }
        if (!progressed) {
            result.error = Error(ErrorCode::E_DEADLOCK, deadlock_message(machines));
            return finish();
        }
    }
}

RunResult run_all(const syntax::Program &program, const RunOptions &options, interp::OutputPort &output) {
    std::set<std::string> names = module_names(program);
    ChannelSet channels(names);
    qcore::QuantumState state(options.qheap, options.sim_cap);
    std::mt19937_64 rng(options.seed);
    interp::StatePort quantum(state, rng);

    StepHook check;
    if (options.check_ownership) {
        check = [&](const std::vector<interp::Machine> &machines) {
            std::vector<int> owned;
            for (const auto &m : machines) {
                for (const auto &ref : m.owned_quantum()) {
                    owned.insert(owned.end(), ref.begin(), ref.end());
                }
            }
            for (const auto &ref : channels.in_flight()) {
                owned.insert(owned.end(), ref.begin(), ref.end());
            }
            std::sort(owned.begin(), owned.end());
            std::vector<int> allocated = state.heap_of_slot();
            std::sort(allocated.begin(), allocated.end());
            if (owned != allocated) {
                throw Error(ErrorCode::E_INTERNAL, "quantum heap ownership invariant violated");
            }
        };
    }
    interp::Ports ports{&quantum, &channels, &output};
    return run_with_ports(
        program, options, [&](const std::string &) { return ports; }, check);
}

}  // namespace cqpl::comm
