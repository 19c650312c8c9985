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

#include "cqpl/kraus/trace_format.h"

#include <json.hpp>

#include "cqpl/qcore/format.h"

namespace cqpl::kraus {

using namespace element;
using nlohmann::json;

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

std::string at(const std::vector<int> &positions) {
    if (positions.empty()) {
        return "";
    }
    std::string s = "@";
    for (size_t i = 0; i < positions.size(); i++) {
        s += (i ? "," : "") + std::to_string(positions[i]);
    }
    return s;
}

std::string value_list(const std::vector<std::string> &values) {
    if (values.empty()) {
        return "";
    }
    std::string s = " [";
    for (size_t i = 0; i < values.size(); i++) {
        s += (i ? ", " : "") + values[i];
    }
    return s + "]";
}

std::string quoted(const std::string &text) {
    return json(text).dump();
}

std::string kind_name(BranchSum::Kind k) {
    return k == BranchSum::Kind::Measure ? "measure" : "receive";
}

void append_text(const Aggregation &agg, int depth, bool global, std::string &out) {
    const std::string indent(static_cast<size_t>(depth) * 2, ' ');
    for (const auto &e : agg) {
        out += indent;
        if (global) {
            out += "[" + e.module + "] ";
        }
        out += element_text(e) + "\n";
        if (auto *sum = std::get_if<BranchSum>(&e.node)) {
            for (const auto &br : sum->branches) {
                out += indent + "  " + branch_tag(*sum, br) + ":\n";
                append_text(br.body, depth + 2, global, out);
            }
        }
    }
}

json to_json(const Aggregation &agg, bool global);

json element_json(const Element &e, bool global) {
    json j = std::visit(
        overloaded{
            [](const Create &n) { return json{{"kind", "create"}, {"positions", n.positions}, {"bits", n.bits}}; },
            [](const Gate &n) {
                json m = json::array();
                for (Eigen::Index r = 0; r < n.matrix.rows(); r++) {
                    for (Eigen::Index c = 0; c < n.matrix.cols(); c++) {
                        m.push_back({n.matrix(r, c).real(), n.matrix(r, c).imag()});
                    }
                }
                return json{{"kind", "gate"}, {"label", n.label}, {"positions", n.positions}, {"matrix", m}};
            },
            [](const Project &n) { return json{{"kind", "project"}, {"value", n.value}, {"positions", n.positions}}; },
            [](const Discard &n) { return json{{"kind", "discard"}, {"positions", n.positions}}; },
            [](const element::Send &n) {
                return json{{"kind", "send"}, {"peer", n.peer}, {"positions", n.positions}, {"values", n.values}};
            },
            [](const element::Receive &n) {
                return json{{"kind", "receive"}, {"peer", n.peer}, {"positions", n.positions}, {"values", n.values}};
            },
            [](const Output &n) { return json{{"kind", "output"}, {"text", n.text}}; },
            [&](const BranchSum &n) {
                json branches = json::array();
                for (const auto &br : n.branches) {
                    branches.push_back(
                        {{"value", br.value}, {"tag", branch_tag(n, br)}, {"body", to_json(br.body, global)}});
                }
                json j{{"kind", "branch_sum"}, {"id", n.id}, {"on", kind_name(n.kind)}, {"branches", branches}};
                if (n.kind == BranchSum::Kind::Measure) {
                    j["positions"] = n.positions;
                } else {
                    j["peer"] = n.peer;
                }
                return j;
            },
            [](const Abort &n) {
                return json{{"kind", "abort"}, {"code", std::string(code_name(n.code))}, {"message", n.message}};
            },
        },
        e.node);
    if (global) {
        j["module"] = e.module;
    }
    return j;
}

json to_json(const Aggregation &agg, bool global) {
    json arr = json::array();
    for (const auto &e : agg) {
        arr.push_back(element_json(e, global));
    }
    return arr;
}

}  // namespace

std::string element_text(const Element &e) {
    return std::visit(
        overloaded{
            [](const Create &n) {
                return "Create(" + qcore::format_ket(n.bits, static_cast<int>(n.positions.size())) + ")" +
                       at(n.positions);
            },
            [](const Gate &n) { return "Gate(" + n.label + ")" + at(n.positions); },
            [](const Project &n) {
                return "Project(" + qcore::format_ket(n.value, static_cast<int>(n.positions.size())) + ")" +
                       at(n.positions);
            },
            [](const Discard &n) { return "Discard" + at(n.positions); },
            [](const element::Send &n) { return "{S}(" + n.peer + ")" + at(n.positions) + value_list(n.values); },
            [](const element::Receive &n) {
                return "{R}(" + n.peer + ")" + at(n.positions) + value_list(n.values);
            },
            [](const Output &n) { return "Output(" + quoted(n.text) + ")"; },
            [](const BranchSum &n) {
                std::string s = "BranchSum " + n.id + " " + kind_name(n.kind);
                return n.kind == BranchSum::Kind::Measure ? s + at(n.positions) : s + "(" + n.peer + ")";
            },
            [](const Abort &n) { return "Abort(" + std::string(code_name(n.code)) + ": " + n.message + ")"; },
        },
        e.node);
}

std::string format_text(const std::vector<ModuleSemantics> &modules) {
    std::string out;
    for (const auto &m : modules) {
        out += "module " + m.name + ":\n";
        append_text(m.trace, 1, false, out);
    }
    return out;
}

std::string format_text_global(const Aggregation &trace) {
    std::string out = "program:\n";
    append_text(trace, 1, true, out);
    return out;
}

std::string format_json(const std::vector<ModuleSemantics> &modules) {
    json mods = json::array();
    for (const auto &m : modules) {
        mods.push_back({{"name", m.name}, {"trace", to_json(m.trace, false)}});
    }
    return json{{"modules", mods}}.dump(2) + "\n";
}

std::string format_json_global(const Aggregation &trace) {
    return json{{"program", to_json(trace, true)}}.dump(2) + "\n";
}

}  // namespace cqpl::kraus
