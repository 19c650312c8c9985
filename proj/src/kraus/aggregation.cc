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

#include "cqpl/kraus/aggregation.h"

#include <algorithm>

namespace cqpl::kraus {

using namespace element;

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

constexpr int kMaxWires = 10;

void max_position(const Aggregation &agg, int &best) {
    auto see = [&](const std::vector<int> &ps) {
        for (int p : ps) {
            best = std::max(best, p);
        }
    };
    for (const auto &e : agg) {
        std::visit(overloaded{
                       [&](const Create &n) { see(n.positions); },
                       [&](const Gate &n) { see(n.positions); },
                       [&](const Project &n) { see(n.positions); },
                       [&](const Discard &n) { see(n.positions); },
                       [&](const element::Send &n) { see(n.positions); },
                       [&](const element::Receive &n) { see(n.positions); },
                       [&](const Output &) {},
                       [&](const BranchSum &n) {
                           see(n.positions);
                           for (const auto &b : n.branches) {
                               max_position(b.body, best);
                           }
                       },
                       [&](const Abort &) {},
                   },
                   e.node);
    }
}

Matrix projector(uint64_t value, std::span<const int> positions, int wires) {
    const size_t k = positions.size();
    Matrix p = Matrix::Zero(Eigen::Index{1} << k, Eigen::Index{1} << k);
    p(static_cast<Eigen::Index>(value), static_cast<Eigen::Index>(value)) = 1.0;
    return embed(p, positions, wires);
}

void check_wires(int wires) {
    if (wires > kMaxWires) {
        throw Error(ErrorCode::E_TOO_LARGE, "aggregation spans " + std::to_string(wires) +
                                                " qbits; dense application supports at most " +
                                                std::to_string(kMaxWires));
    }
}

Matrix apply_one(const KrausSet &set, const Matrix &rho) {
    return apply_set(set, rho);
}

void walk(const Aggregation &agg, size_t from, Matrix rho, int wires, Leaf leaf, std::vector<Leaf> &out) {
    for (size_t i = from; i < agg.size(); i++) {
        const Element &e = agg[i];
        if (auto *o = std::get_if<Output>(&e.node)) {
            leaf.outputs.push_back(o->text);
            continue;
        }
        if (auto *a = std::get_if<Abort>(&e.node)) {
            leaf.abort = a->code;
            break;
        }
        if (auto *sum = std::get_if<BranchSum>(&e.node)) {
            for (const auto &branch : sum->branches) {
                Leaf next = leaf;
                next.path.emplace_back(sum->id, branch.value);
                walk(branch.body, 0, rho, wires, std::move(next), out);
            }
            return;
        }
        rho = apply_one(element_set(e, wires), rho);
    }
    leaf.probability = std::max(0.0, rho.trace().real());
    leaf.state = std::move(rho);
    out.push_back(std::move(leaf));
}

}  // namespace

std::string branch_tag(const BranchSum &sum, const Branch &branch) {
    return "p(" + sum.id + "=" + std::to_string(branch.value) + ")";
}

int wire_count(const Aggregation &agg) {
    int best = -1;
    max_position(agg, best);
    return best + 1;
}

KrausSet element_set(const Element &e, int wires) {
    const Eigen::Index dim = Eigen::Index{1} << wires;
    return std::visit(
        overloaded{
            [&](const Create &n) {
                // reset each wire to its bit: {|b><0|, |b><1|}
                KrausSet set{Matrix::Identity(dim, dim)};
                const size_t k = n.positions.size();
                for (size_t j = 0; j < k; j++) {
                    int b = static_cast<int>((n.bits >> (k - 1 - j)) & 1);
                    Matrix r0 = Matrix::Zero(2, 2), r1 = Matrix::Zero(2, 2);
                    r0(b, 0) = 1.0;
                    r1(b, 1) = 1.0;
                    const int w = n.positions[j];
                    KrausSet reset{embed(r0, std::span<const int>(&w, 1), wires),
                                   embed(r1, std::span<const int>(&w, 1), wires)};
                    set = contract(set, reset);
                    std::erase_if(set.ops, [](const Matrix &m) { return m.cwiseAbs().maxCoeff() == 0.0; });
                }
                return set;
            },
            [&](const Gate &n) { return KrausSet{embed(n.matrix, n.positions, wires)}; },
            [&](const Project &n) { return KrausSet{projector(n.value, n.positions, wires)}; },
            [&](const BranchSum &) -> KrausSet {
                throw Error(ErrorCode::E_INTERNAL, "a branch sum is not a single Kraus set");
            },
            [&](const Abort &) { return KrausSet{Matrix::Zero(dim, dim)}; },
            [&](const auto &) { return KrausSet{Matrix::Identity(dim, dim)}; },
        },
        e.node);
}

KrausSet contract_prefix(const Aggregation &agg, int wires) {
    check_wires(wires);
    const Eigen::Index dim = Eigen::Index{1} << wires;
    KrausSet set{Matrix::Identity(dim, dim)};
    for (const auto &e : agg) {
        if (std::holds_alternative<BranchSum>(e.node)) {
            break;
        }
        set = contract(set, element_set(e, wires));
        std::erase_if(set.ops, [](const Matrix &m) { return m.cwiseAbs().maxCoeff() == 0.0; });
        if (set.ops.empty()) {
            set.ops.push_back(Matrix::Zero(dim, dim));
        }
    }
    return set;
}

std::vector<Leaf> leaves(const Aggregation &agg, int wires) {
    check_wires(wires);
    const Eigen::Index dim = Eigen::Index{1} << wires;
    Matrix rho = Matrix::Zero(dim, dim);
    rho(0, 0) = 1.0;
    std::vector<Leaf> out;
    walk(agg, 0, rho, wires, Leaf{}, out);
    return out;
}

Matrix apply(const Aggregation &agg, const Matrix &rho, int wires) {
    check_wires(wires);
    std::vector<Leaf> out;
    walk(agg, 0, rho, wires, Leaf{}, out);
    Matrix sum = Matrix::Zero(rho.rows(), rho.cols());
    for (const auto &leaf : out) {
        if (!leaf.abort) {
            sum += leaf.state;
        }
    }
    return sum;
}

}  // namespace cqpl::kraus
