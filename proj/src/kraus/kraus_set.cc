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

#include "cqpl/kraus/kraus_set.h"

#include <string>

#include "cqpl/error.h"

namespace cqpl::kraus {

namespace {

std::string shape(const Matrix &m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_uniform(const KrausSet &set) {
    for (const auto &op : set.ops) {
        if (op.rows() != set.rows() || op.cols() != set.cols()) {
            throw Error(ErrorCode::E_DIM, "Kraus set mixes " + shape(op) + " and " + shape(set.ops.front()));
        }
    }
}

}  // namespace

Matrix apply_set(const KrausSet &set, const Matrix &rho) {
    require_uniform(set);
    if (set.ops.empty()) {
        throw Error(ErrorCode::E_DIM, "empty Kraus set");
    }
    if (rho.rows() != rho.cols() || rho.rows() != set.cols()) {
        throw Error(ErrorCode::E_DIM, "cannot apply " + shape(set.ops.front()) + " operators to a " + shape(rho) +
                                          " density matrix");
    }
    Matrix out = Matrix::Zero(set.rows(), set.rows());
    for (const auto &a : set.ops) {
        out.noalias() += a * rho * a.adjoint();
    }
    return out;
}

KrausSet contract(const KrausSet &first, const KrausSet &second) {
    require_uniform(first);
    require_uniform(second);
    if (first.ops.empty() || second.ops.empty()) {
        throw Error(ErrorCode::E_DIM, "cannot contract an empty Kraus set");
    }
    if (second.cols() != first.rows()) {
        throw Error(ErrorCode::E_DIM, "inner dimensions differ: " + shape(second.ops.front()) + " after " +
                                          shape(first.ops.front()));
    }
    const size_t n = std::max(first.size(), second.size());
    const Matrix zero_a = Matrix::Zero(first.rows(), first.cols());
    const Matrix zero_b = Matrix::Zero(second.rows(), second.cols());
    KrausSet out;
    out.ops.reserve(n * n);
    for (size_t i = 0; i < n; i++) {
        const Matrix &b = i < second.size() ? second.ops[i] : zero_b;
        for (size_t j = 0; j < n; j++) {
            const Matrix &a = j < first.size() ? first.ops[j] : zero_a;
            out.ops.push_back(b * a);
        }
    }
    return out;
}

Matrix completeness(const KrausSet &set) {
    require_uniform(set);
    Matrix out = Matrix::Zero(set.cols(), set.cols());
    for (const auto &a : set.ops) {
        out.noalias() += a.adjoint() * a;
    }
    return out;
}

bool trace_preserving(const KrausSet &set, double tol) {
    Matrix c = completeness(set);
    return (c - Matrix::Identity(c.rows(), c.cols())).cwiseAbs().maxCoeff() <= tol;
}

Complex hs_inner(const Matrix &k, const Matrix &l) {
    if (k.rows() != l.rows() || k.cols() != l.cols()) {
        throw Error(ErrorCode::E_DIM, "Hilbert-Schmidt product of " + shape(k) + " and " + shape(l));
    }
    return (k.adjoint() * l).trace();
}

bool loewner_leq(const Matrix &a, const Matrix &b, double tol) {
    if (a.rows() != a.cols() || a.rows() != b.rows() || b.rows() != b.cols()) {
        throw Error(ErrorCode::E_DIM, "Loewner comparison of " + shape(a) + " and " + shape(b));
    }
    for (const Matrix *m : {&a, &b}) {
        if (m->size() > 0 && (*m - m->adjoint()).cwiseAbs().maxCoeff() > tol) {
            throw Error(ErrorCode::E_NOT_HERMITIAN, "Loewner order needs Hermitian matrices");
        }
    }
    if (a.size() == 0) {
        return true;
    }
    Matrix diff = b - a;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(diff, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff() >= -tol;
}

Matrix choi(const KrausSet &set) {
    require_uniform(set);
    const Eigen::Index d_out = set.rows(), d_in = set.cols();
    Matrix out = Matrix::Zero(d_out * d_in, d_out * d_in);
    Eigen::VectorXcd v(d_out * d_in);
    for (const auto &a : set.ops) {
        for (Eigen::Index r = 0; r < d_out; r++) {
            for (Eigen::Index i = 0; i < d_in; i++) {
                v(r * d_in + i) = a(r, i);
            }
        }
        out.noalias() += v * v.adjoint();
    }
    return out;
}

bool channel_equiv(const KrausSet &a, const KrausSet &b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorCode::E_DIM, "channels have different shapes");
    }
    Matrix diff = choi(a) - choi(b);
    return diff.size() == 0 || diff.cwiseAbs().maxCoeff() <= tol;
}

Matrix embed(const Matrix &op, std::span<const int> wires, int n) {
    const int k = static_cast<int>(wires.size());
    if (op.rows() != op.cols() || op.rows() != (Eigen::Index{1} << k)) {
        throw Error(ErrorCode::E_DIM, "a " + shape(op) + " operator cannot act on " + std::to_string(k) + " wire(s)");
    }
    const Eigen::Index dim = Eigen::Index{1} << n;
    uint64_t mask = 0;
    for (int w : wires) {
        if (w < 0 || w >= n || ((mask >> w) & 1)) {
            throw Error(ErrorCode::E_DIM, "bad wire " + std::to_string(w));
        }
        mask |= uint64_t{1} << w;
    }
    auto local = [&](uint64_t index) {
        uint64_t v = 0;
        for (int w : wires) {
            v = (v << 1) | ((index >> w) & 1);
        }
        return v;
    };
    Matrix out = Matrix::Zero(dim, dim);
    for (Eigen::Index c = 0; c < dim; c++) {
        const uint64_t rest = static_cast<uint64_t>(c) & ~mask;
        const uint64_t lc = local(c);
        for (uint64_t lr = 0; lr < (uint64_t{1} << k); lr++) {
            uint64_t r = rest;
            for (int j = 0; j < k; j++) {
                if ((lr >> (k - 1 - j)) & 1) {
                    r |= uint64_t{1} << wires[j];
                }
            }
            out(static_cast<Eigen::Index>(r), c) = op(static_cast<Eigen::Index>(lr), static_cast<Eigen::Index>(lc));
        }
    }
    return out;
}

}  // namespace cqpl::kraus
