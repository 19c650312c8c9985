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

#include "cqpl/kraus/equiv.h"

#include <algorithm>
#include <map>
#include <set>

#include "cqpl/kraus/semantics.h"

namespace cqpl::kraus {

using namespace element;

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

bool matrices_close(const Matrix &a, const Matrix &b, double tol) {
    return a.rows() == b.rows() && a.cols() == b.cols() && (a - b).cwiseAbs().maxCoeff() <= tol;
}

Aggregation without_output(const Aggregation &agg) {
    Aggregation out;
    for (const auto &e : agg) {
        if (!std::holds_alternative<Output>(e.node)) {
            out.push_back(e);
        }
    }
    return out;
}

/// Equality of two non-branching elements, positions mapped through `ra`/`rb`.
template <class Rename>
bool same_element(const Element &x, const Element &y, Rename ra, Rename rb, double tol) {
    if (x.node.index() != y.node.index()) {
        return false;
    }
    auto same_pos = [&](const std::vector<int> &p, const std::vector<int> &q) {
        if (p.size() != q.size()) {
            return false;
        }
        for (size_t i = 0; i < p.size(); i++) {
            if (ra(p[i]) != rb(q[i])) {
                return false;
            }
        }
        return true;
    };
    return std::visit(
        overloaded{
            [&](const Create &n) {
                const auto &m = std::get<Create>(y.node);
                return n.bits == m.bits && same_pos(n.positions, m.positions);
            },
            [&](const Gate &n) {
                const auto &m = std::get<Gate>(y.node);
                return same_pos(n.positions, m.positions) && matrices_close(n.matrix, m.matrix, tol);
            },
            [&](const Project &n) {
                const auto &m = std::get<Project>(y.node);
                return n.value == m.value && same_pos(n.positions, m.positions);
            },
            [&](const Discard &n) { return same_pos(n.positions, std::get<Discard>(y.node).positions); },
            [&](const element::Send &n) {
                const auto &m = std::get<element::Send>(y.node);
                return n.peer == m.peer && n.values == m.values && same_pos(n.positions, m.positions);
            },
            [&](const element::Receive &n) {
                const auto &m = std::get<element::Receive>(y.node);
                return n.peer == m.peer && n.values == m.values && same_pos(n.positions, m.positions);
            },
            [&](const Output &n) { return n.text == std::get<Output>(y.node).text; },
            [&](const BranchSum &) { return false; },
            [&](const Abort &n) { return n.code == std::get<Abort>(y.node).code; },
        },
        x.node);
}

// --- exact ------------------------------------------------------------------

struct Renaming {
    std::map<int, int> map;
    int next = 0;

    int operator()(int p) {
        auto [it, fresh] = map.try_emplace(p, next);
        if (fresh) {
            next++;
        }
        return it->second;
    }
};

bool exact(const Aggregation &a, const Aggregation &b, Renaming ra, Renaming rb, double tol) {
    if (a.size() != b.size()) {
        return false;
    }
    for (size_t i = 0; i < a.size(); i++) {
        const Element &x = a[i];
        const Element &y = b[i];
        auto *sx = std::get_if<BranchSum>(&x.node);
        auto *sy = std::get_if<BranchSum>(&y.node);
        if (sx || sy) {
            if (!sx || !sy || sx->kind != sy->kind || sx->peer != sy->peer ||
                sx->positions.size() != sy->positions.size() || sx->branches.size() != sy->branches.size()) {
                return false;
            }
            for (size_t k = 0; k < sx->positions.size(); k++) {
                if (ra(sx->positions[k]) != rb(sy->positions[k])) {
                    return false;
                }
            }
            for (size_t k = 0; k < sx->branches.size(); k++) {
                if (sx->branches[k].value != sy->branches[k].value ||
                    !exact(without_output(sx->branches[k].body), without_output(sy->branches[k].body), ra, rb,
                           tol)) {
                    return false;
                }
            }
            continue;
        }
        auto fa = [&](int p) { return ra(p); };
        auto fb = [&](int p) { return rb(p); };
        if (!same_element(x, y, std::function<int(int)>(fa), std::function<int(int)>(fb), tol)) {
            return false;
        }
    }
    return true;
}

// --- reorder ----------------------------------------------------------------

std::vector<int> positions_of(const Element &e) {
    return std::visit(overloaded{
                          [](const Create &n) { return n.positions; },
                          [](const Gate &n) { return n.positions; },
                          [](const Project &n) { return n.positions; },
                          [](const Discard &n) { return n.positions; },
                          [](const element::Send &n) { return n.positions; },
                          [](const element::Receive &n) { return n.positions; },
                          [](const auto &) { return std::vector<int>{}; },
                      },
                      e.node);
}

std::optional<std::string> peer_of(const Element &e) {
    if (auto *s = std::get_if<element::Send>(&e.node)) {
        return s->peer;
    }
    if (auto *r = std::get_if<element::Receive>(&e.node)) {
        return r->peer;
    }
    return std::nullopt;
}

/// Elements on disjoint positions commute, except that placeholders for the
/// same peer keep their order.
bool independent(const Element &x, const Element &y) {
    auto px = positions_of(x), py = positions_of(y);
    for (int p : px) {
        if (std::find(py.begin(), py.end(), p) != py.end()) {
            return false;
        }
    }
    auto qx = peer_of(x), qy = peer_of(y);
    return !(qx && qy && *qx == *qy);
}

bool is_barrier(const Element &e) {
    return std::holds_alternative<BranchSum>(e.node) || std::holds_alternative<Abort>(e.node);
}

bool reorder(const Aggregation &a0, const Aggregation &b0, double tol) {
    Aggregation a = without_output(a0), b = without_output(b0);
    auto split = [](const Aggregation &agg) {
        size_t i = 0;
        while (i < agg.size() && !is_barrier(agg[i])) {
            i++;
        }
        return i;
    };
    size_t na = split(a), nb = split(b);
    if (na != nb) {
        return false;
    }
    auto id = [](int p) { return p; };
    std::vector<bool> used(na, false);
    for (size_t j = 0; j < nb; j++) {
        bool matched = false;
        for (size_t i = 0; i < na && !matched; i++) {
            if (used[i]) {
                continue;
            }
            if (same_element(a[i], b[j], id, id, tol)) {
                used[i] = true;
                matched = true;
                break;
            }
            if (!independent(a[i], b[j])) {
                break;
            }
        }
        if (!matched) {
            return false;
        }
    }
    if (a.size() - na != b.size() - nb) {
        return false;
    }
    if (na == a.size()) {
        return true;
    }
    const Element &x = a[na], &y = b[nb];
    if (x.node.index() != y.node.index()) {
        return false;
    }
    if (auto *ab = std::get_if<Abort>(&x.node)) {
        return ab->code == std::get<Abort>(y.node).code;
    }
    const auto &sx = std::get<BranchSum>(x.node), &sy = std::get<BranchSum>(y.node);
    if (sx.kind != sy.kind || sx.peer != sy.peer || sx.positions != sy.positions ||
        sx.branches.size() != sy.branches.size()) {
        return false;
    }
    for (size_t k = 0; k < sx.branches.size(); k++) {
        if (sx.branches[k].value != sy.branches[k].value ||
            !reorder(sx.branches[k].body, sy.branches[k].body, tol)) {
            return false;
        }
    }
    return true;
}

// --- channel ----------------------------------------------------------------

using Vectors = std::vector<Eigen::VectorXcd>;

struct ChannelLeaf {
    std::vector<uint64_t> path;
    std::optional<ErrorCode> abort;
    Vectors vectors;
    std::set<int> dead;
};

void collect(const Aggregation &agg, int wires, Vectors vecs, std::vector<uint64_t> path, std::set<int> dead,
             std::vector<ChannelLeaf> &out) {
    for (const auto &e : agg) {
        if (auto *sum = std::get_if<BranchSum>(&e.node)) {
            for (const auto &br : sum->branches) {
                auto p = path;
                p.push_back(br.value);
                collect(br.body, wires, vecs, std::move(p), dead, out);
            }
            return;
        }
        if (auto *ab = std::get_if<Abort>(&e.node)) {
            out.push_back({std::move(path), ab->code, {}, {}});
            return;
        }
        if (auto *d = std::get_if<Discard>(&e.node)) {
            dead.insert(d->positions.begin(), d->positions.end());
            continue;
        }
        if (auto *c = std::get_if<Create>(&e.node)) {
            for (int p : c->positions) {
                dead.erase(p);
            }
        }
        KrausSet set = element_set(e, wires);
        Vectors next;
        for (const auto &op : set.ops) {
            for (const auto &v : vecs) {
                Eigen::VectorXcd w = op * v;
                if (w.cwiseAbs().maxCoeff() > 1e-14) {
                    next.push_back(std::move(w));
                }
            }
        }
        vecs = std::move(next);
    }
    out.push_back({std::move(path), std::nullopt, std::move(vecs), std::move(dead)});
}

/// Traces out the dead wires: each vector splits into one vector over the
/// live wires per basis value of the dead ones.
KrausSet reduce(const ChannelLeaf &leaf, int wires) {
    std::vector<int> live;
    for (int w = 0; w < wires; w++) {
        if (!leaf.dead.count(w)) {
            live.push_back(w);
        }
    }
    const std::vector<int> dead(leaf.dead.begin(), leaf.dead.end());
    const Eigen::Index live_dim = Eigen::Index{1} << live.size();
    KrausSet set;
    for (const auto &v : leaf.vectors) {
        for (uint64_t d = 0; d < (uint64_t{1} << dead.size()); d++) {
            Matrix part = Matrix::Zero(live_dim, 1);
            for (Eigen::Index l = 0; l < live_dim; l++) {
                uint64_t index = 0;
                for (size_t k = 0; k < live.size(); k++) {
                    if ((static_cast<uint64_t>(l) >> k) & 1) {
                        index |= uint64_t{1} << live[k];
                    }
                }
                for (size_t k = 0; k < dead.size(); k++) {
                    if ((d >> k) & 1) {
                        index |= uint64_t{1} << dead[k];
                    }
                }
                part(l, 0) = v(static_cast<Eigen::Index>(index));
            }
            if (part.cwiseAbs().maxCoeff() > 1e-14) {
                set.ops.push_back(std::move(part));
            }
        }
    }
    if (set.ops.empty()) {
        set.ops.push_back(Matrix::Zero(live_dim, 1));
    }
    return set;
}

std::vector<ChannelLeaf> channel_leaves(const Aggregation &agg, int wires) {
    Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(Eigen::Index{1} << wires);
    zero(0) = 1.0;
    std::vector<ChannelLeaf> out;
    collect(agg, wires, {zero}, {}, {}, out);
    std::sort(out.begin(), out.end(), [](const auto &x, const auto &y) { return x.path < y.path; });
    return out;
}

}  // namespace

std::optional<EquivMode> equiv_mode_from_name(std::string_view name) {
    if (name == "exact") {
        return EquivMode::Exact;
    }
    if (name == "reorder") {
        return EquivMode::Reorder;
    }
    if (name == "channel") {
        return EquivMode::Channel;
    }
    return std::nullopt;
}

bool traces_equal_exact(const Aggregation &a, const Aggregation &b, double tol) {
    return exact(without_output(a), without_output(b), Renaming{}, Renaming{}, tol);
}

bool traces_equal_reorder(const Aggregation &a, const Aggregation &b, double tol) {
    return reorder(a, b, tol);
}

bool traces_equal_channel(const Aggregation &a, const Aggregation &b, int max_qbits, double tol) {
    const int wa = wire_count(a), wb = wire_count(b);
    const int wires = std::max(wa, wb);
    if (wires > max_qbits) {
        throw Error(ErrorCode::E_TOO_LARGE, "channel comparison needs " + std::to_string(wires) +
                                                " qbits; the limit is " + std::to_string(max_qbits));
    }
    auto la = channel_leaves(a, wires), lb = channel_leaves(b, wires);
    if (la.size() != lb.size()) {
        return false;
    }
    for (size_t i = 0; i < la.size(); i++) {
        if (la[i].path != lb[i].path || la[i].abort != lb[i].abort) {
            return false;
        }
        if (la[i].abort) {
            continue;
        }
        KrausSet ka = reduce(la[i], wires), kb = reduce(lb[i], wires);
        if (ka.rows() != kb.rows() || !channel_equiv(ka, kb, tol)) {
            return false;
        }
    }
    return true;
}

bool programs_equiv(const syntax::Program &a, const syntax::Program &b, const EquivOptions &options) {
    if (options.mode == EquivMode::Channel) {
        return traces_equal_channel(extract_global(a, options.explore), extract_global(b, options.explore),
                                    options.max_qbits, options.tol);
    }
    auto ma = extract_semantics(a, options.explore), mb = extract_semantics(b, options.explore);
    auto by_name = [](const ModuleSemantics &x, const ModuleSemantics &y) { return x.name < y.name; };
    std::sort(ma.begin(), ma.end(), by_name);
    std::sort(mb.begin(), mb.end(), by_name);
    if (ma.size() != mb.size()) {
        return false;
    }
    for (size_t i = 0; i < ma.size(); i++) {
        if (ma[i].name != mb[i].name) {
            return false;
        }
        bool same = options.mode == EquivMode::Exact ? traces_equal_exact(ma[i].trace, mb[i].trace)
                                                     : traces_equal_reorder(ma[i].trace, mb[i].trace);
        if (!same) {
            return false;
        }
    }
    return true;
}

}  // namespace cqpl::kraus
