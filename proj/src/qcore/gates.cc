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

#include "cqpl/qcore/gates.h"

#include <cmath>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "cqpl/error.h"

namespace cqpl::qcore {

Matrix hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    Matrix h(2, 2);
    h << s, s, s, -s;
    return h;
}

Matrix pauli_x() {
    Matrix x(2, 2);
    x << 0, 1, 1, 0;
    return x;
}

Matrix cnot() {
    Matrix c = Matrix::Zero(4, 4);
    c(0, 0) = 1;
    c(1, 1) = 1;
    c(2, 3) = 1;
    c(3, 2) = 1;
    return c;
}

Matrix phase(double radians) {
    Matrix p = Matrix::Identity(2, 2);
    p(1, 1) = std::polar(1.0, radians);
    return p;
}

Matrix ft(int n) {
    if (n < 1) {
        throw Error(ErrorCode::E_BAD_PARAM, "FT(n) needs n >= 1, got " + std::to_string(n));
    }
    if (n > kMaxDenseFT) {
        throw Error(ErrorCode::E_BAD_PARAM, "FT(" + std::to_string(n) + ") is too large to materialize");
    }
    Matrix out = hadamard();
    for (int i = 1; i < n; i++) {
        Matrix next = Eigen::kroneckerProduct(out, hadamard()).eval();
        out = std::move(next);
    }
    return out;
}

Matrix builtin_gate(std::string_view name, std::span<const double> params) {
    auto need = [&](size_t n) {
        if (params.size() != n) {
            throw Error(ErrorCode::E_BAD_PARAM, std::string(name) + " takes " + std::to_string(n) + " parameter(s)");
        }
    };
    if (name == "H") {
        need(0);
        return hadamard();
    }
    if (name == "Not") {
        need(0);
        return pauli_x();
    }
    if (name == "CNot") {
        need(0);
        return cnot();
    }
    if (name == "Phase") {
        need(1);
        if (!std::isfinite(params[0])) {
            throw Error(ErrorCode::E_BAD_PARAM, "Phase needs a finite real angle");
        }
        return phase(params[0]);
    }
    if (name == "FT") {
        need(1);
        if (params[0] != std::floor(params[0])) {
            throw Error(ErrorCode::E_BAD_PARAM, "FT needs an integer size");
        }
        return ft(static_cast<int>(params[0]));
    }
    throw Error(ErrorCode::E_BAD_PARAM, "unknown gate '" + std::string(name) + "'");
}

Matrix from_row_major(std::span<const Complex> entries) {
    auto side = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(entries.size()))));
    if (side == 0 || static_cast<size_t>(side * side) != entries.size() || (side & (side - 1)) != 0) {
        throw Error(ErrorCode::E_DIM, "matrix with " + std::to_string(entries.size()) +
                                          " entries is not square with a power-of-two side");
    }
    Matrix m(side, side);
    for (Eigen::Index r = 0; r < side; r++) {
        for (Eigen::Index c = 0; c < side; c++) {
            m(r, c) = entries[static_cast<size_t>(r * side + c)];
        }
    }
    return m;
}

double unitarity_error(const Matrix &u) {
    if (u.rows() != u.cols()) {
        return INFINITY;
    }
    Matrix d = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
    return d.cwiseAbs().maxCoeff();
}

int qbit_count(const Matrix &u) {
    Eigen::Index side = u.rows();
    if (side != u.cols() || side == 0 || (side & (side - 1)) != 0) {
        return -1;
    }
    int k = 0;
    while ((Eigen::Index{1} << k) < side) {
        k++;
    }
    return k;
}

}  // namespace cqpl::qcore
