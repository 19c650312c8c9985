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

#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace cqpl::kraus {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Finite family {A_k} of equally shaped matrices acting as rho -> sum A_k rho A_k^dagger.
struct KrausSet {
    std::vector<Matrix> ops;

    KrausSet() = default;
    KrausSet(std::initializer_list<Matrix> list) : ops(list) {
    }
    explicit KrausSet(std::vector<Matrix> list) : ops(std::move(list)) {
    }

    Eigen::Index rows() const {
        return ops.empty() ? 0 : ops.front().rows();
    }
    Eigen::Index cols() const {
        return ops.empty() ? 0 : ops.front().cols();
    }
    size_t size() const {
        return ops.size();
    }
};

/// sum_k A_k rho A_k^dagger. Throws E_DIM on shape mismatch.
Matrix apply_set(const KrausSet &set, const Matrix &rho);

/// Normal form of "first S1, then S2". Both sets are padded with zero
/// matrices to N = max(|S1|, |S2|) elements and C_{iN+j} = B_i A_j.
KrausSet contract(const KrausSet &first, const KrausSet &second);

/// sum_k A_k^dagger A_k
Matrix completeness(const KrausSet &set);
bool trace_preserving(const KrausSet &set, double tol = 1e-9);

/// tr(K^dagger L)
Complex hs_inner(const Matrix &k, const Matrix &l);

/// A is below B in the Loewner order iff B - A is positive semidefinite,
/// i.e. its smallest eigenvalue is at least -tol. Throws E_NOT_HERMITIAN.
bool loewner_leq(const Matrix &a, const Matrix &b, double tol = 1e-10);

/// sum_k (A_k (x) I)|Omega><Omega|(A_k (x) I)^dagger with the unnormalised
/// |Omega> = sum_i |i>|i>.
Matrix choi(const KrausSet &set);

/// Whether two sets implement the same completely positive map.
bool channel_equiv(const KrausSet &a, const KrausSet &b, double tol = 1e-10);

/// Lifts a 2^k x 2^k operator on `wires` (first = most significant) to the
/// full 2^n x 2^n space. Wire w is bit w of a basis index.
Matrix embed(const Matrix &op, std::span<const int> wires, int n);

}  // namespace cqpl::kraus
