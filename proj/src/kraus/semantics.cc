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

#include "cqpl/kraus/semantics.h"

#include "cqpl/comm/scheduler.h"

namespace cqpl::kraus {

std::vector<ModuleSemantics> extract_semantics(const syntax::Program &program, const ExploreOptions &options) {
    std::vector<ModuleSemantics> out;
    if (!program.is_modular()) {
        out.push_back({comm::kMainModule, explore_module(comm::kMainModule, program.statements, options)});
        return out;
    }
    for (const auto &m : program.modules) {
        out.push_back({m.name, explore_module(m.name, m.body, options)});
    }
    return out;
}

Aggregation extract_global(const syntax::Program &program, const ExploreOptions &options) {
    return explore_global(program, options);
}

std::map<std::string, double> predict_outputs(const Aggregation &global) {
    std::map<std::string, double> dist;
    for (const auto &leaf : leaves(global, wire_count(global))) {
        std::string key;
        for (size_t i = 0; i < leaf.outputs.size(); i++) {
            key += (i ? "\n" : "") + leaf.outputs[i];
        }
        if (leaf.abort) {
            key += "\n<abort " + std::string(code_name(*leaf.abort)) + ">";
        }
        dist[key] += leaf.probability;
    }
    return dist;
}

}  // namespace cqpl::kraus
