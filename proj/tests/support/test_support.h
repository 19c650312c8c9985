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

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <Eigen/Dense>

#include "cqpl/syntax/parser.h"
#include "cqpl/types/checker.h"

namespace testing_support {

inline std::string source_path(const std::string &relative) {
    return std::string(CQPL_SOURCE_DIR) + "/" + relative;
}

inline std::string read_file(const std::string &relative) {
    std::ifstream in(source_path(relative));
    if (!in) {
        throw std::runtime_error("cannot open " + relative);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Parses and type-checks; throws on any error diagnostic.
inline cqpl::syntax::Program load_checked(const std::string &source) {
    cqpl::syntax::Program p = cqpl::syntax::parse_source(source);
    auto result = cqpl::types::check_program(p);
    if (!result.ok()) {
        std::string msg;
        for (const auto &d : result.diagnostics) {
            msg += d.format("<test>") + "\n";
        }
        throw std::runtime_error(msg);
    }
    return p;
}

inline Eigen::MatrixXcd random_matrix(std::mt19937_64 &rng, Eigen::Index rows, Eigen::Index cols) {
    std::normal_distribution<double> g;
    Eigen::MatrixXcd m(rows, cols);
    for (Eigen::Index r = 0; r < rows; r++) {
        for (Eigen::Index c = 0; c < cols; c++) {
            m(r, c) = {g(rng), g(rng)};
        }
    }
    return m;
}

/// Haar-ish unitary from the QR factorisation of a Gaussian matrix.
inline Eigen::MatrixXcd random_unitary(std::mt19937_64 &rng, Eigen::Index d) {
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(random_matrix(rng, d, d));
    return qr.householderQ() * Eigen::MatrixXcd::Identity(d, d);
}

/// Random density matrix of dimension d.
inline Eigen::MatrixXcd random_density(std::mt19937_64 &rng, Eigen::Index d) {
    Eigen::MatrixXcd a = random_matrix(rng, d, d);
    Eigen::MatrixXcd rho = a * a.adjoint();
    return rho / rho.trace().real();
}

/// Trace-preserving Kraus family of n operators on dimension d, cut from a
/// random isometry.
inline std::vector<Eigen::MatrixXcd> random_kraus(std::mt19937_64 &rng, Eigen::Index d, int n) {
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(random_matrix(rng, d * n, d));
    Eigen::MatrixXcd v = qr.householderQ() * Eigen::MatrixXcd::Identity(d * n, d);
    std::vector<Eigen::MatrixXcd> ops;
    for (int k = 0; k < n; k++) {
        ops.push_back(v.block(k * d, 0, d, d));
    }
    return ops;
}

}  // namespace testing_support
