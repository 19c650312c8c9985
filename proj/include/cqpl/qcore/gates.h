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
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace cqpl::qcore {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Largest FT(n) that builtin_gate materializes as a dense matrix. The
/// interpreter applies FT(n) as n single-qbit Hadamards and has no limit.
inline constexpr int kMaxDenseFT = 10;

Matrix hadamard();
Matrix pauli_x();
Matrix cnot();
Matrix phase(double radians);
/// n-fold tensor power of H.
Matrix ft(int n);

/// Gate by name: "H", "Not", "CNot", "Phase" (params[0] = angle), "FT"
/// (params[0] = n). Throws E_BAD_PARAM for bad parameters or unknown names.
Matrix builtin_gate(std::string_view name, std::span<const double> params = {});

/// Square matrix from row-major entries. Throws E_DIM unless the side is a
/// power of two.
Matrix from_row_major(std::span<const Complex> entries);

/// max |(U^dagger U - I)_ij|
double unitarity_error(const Matrix &u);

inline constexpr double kUnitaryTol = 1e-9;

inline bool is_unitary(const Matrix &u, double tol = kUnitaryTol) {
    return u.rows() == u.cols() && unitarity_error(u) <= tol;
}

/// log2 of the side, or -1 when the side is not a power of two.
int qbit_count(const Matrix &u);

}  // namespace cqpl::qcore
