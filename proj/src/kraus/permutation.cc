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

#include "cqpl/kraus/permutation.h"

#include <algorithm>

#include "cqpl/error.h"

namespace cqpl::kraus {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)), inverse_(image_.size(), 0) {
    const int n = size();
    for (int i = 0; i < n; i++) {
        int v = image_[i];
        if (v < 1 || v > n || inverse_[v - 1] != 0) {
            throw Error(ErrorCode::E_BAD_PARAM, "not a permutation of 1.." + std::to_string(n));
        }
        inverse_[v - 1] = i + 1;
    }
}

Permutation Permutation::parse(std::string_view digits) {
    std::vector<int> image;
    for (char c : digits) {
        if (c < '1' || c > '9') {
            throw Error(ErrorCode::E_BAD_PARAM, "permutation digits must be 1-9");
        }
        image.push_back(c - '0');
    }
    return Permutation(std::move(image));
}

Permutation Permutation::identity(int n) {
    std::vector<int> image(n);
    for (int i = 0; i < n; i++) {
        image[i] = i + 1;
    }
    return Permutation(std::move(image));
}

std::vector<Inversion> inversions(const Permutation &phi) {
    std::vector<Inversion> out;
    const int n = phi.size();
    for (int i = 1; i <= n; i++) {
        for (int j = i + 1; j <= n; j++) {
            if (phi(i) > phi(j)) {
                out.push_back({phi(i), phi(j)});
            }
        }
    }
    return out;
}

CommutatorExpansion commutator_expansion(const Permutation &phi) {
    std::vector<Inversion> inv = inversions(phi);
    std::sort(inv.begin(), inv.end(), [](const Inversion &a, const Inversion &b) {
        return a.s != b.s ? a.s > b.s : a.t > b.t;
    });
    const int n = phi.size();
    CommutatorExpansion out{phi, {}};
    for (const auto &[s, t] : inv) {
        CommutatorTerm term{s, t, {}, {}, {}, {}, {}};
        const int pos_t = phi.inverse(t);
        for (int i = 1; i <= n; i++) {
            if (phi(i) >= s) {
                continue;
            }
            if (i < pos_t) {
                term.x_positions.push_back(i);
                term.x.push_back(phi(i));
            } else if (i > pos_t) {
                term.y_positions.push_back(i);
                term.y.push_back(phi(i));
            }
        }
        for (int k = s + 1; k <= n; k++) {
            term.z.push_back(k);
        }
        out.terms.push_back(std::move(term));
    }
    return out;
}

std::string CommutatorExpansion::to_string() const {
    const int n = phi.size();
    const std::string sep = n > 9 ? " " : "";
    auto word = [&](const std::vector<int> &factors) {
        std::string w;
        for (size_t i = 0; i < factors.size(); i++) {
            w += (i ? sep : "") + std::to_string(factors[i]);
        }
        return w;
    };
    std::string out = word(phi.image()) + " = " + word(Permutation::identity(n).image());
    for (const auto &term : terms) {
        std::string x = word(term.x), y = word(term.y), z = word(term.z);
        std::string bracket = "[" + std::to_string(term.s) + "," + std::to_string(term.t) + "]";
        out += " + " + x + (x.empty() ? "" : sep) + bracket + (y.empty() ? "" : sep) + y +
               (z.empty() || sep.empty() ? "" : sep) + z;
    }
    return out;
}

double verify_commutator_identity(std::span<const Matrix> matrices, const Permutation &phi) {
    const int n = phi.size();
    if (static_cast<int>(matrices.size()) != n || n == 0) {
        throw Error(ErrorCode::E_DIM, "need exactly one matrix per permuted index");
    }
    const Eigen::Index d = matrices[0].rows();
    for (const auto &m : matrices) {
        if (m.rows() != d || m.cols() != d) {
            throw Error(ErrorCode::E_DIM, "commutator identity needs square matrices of one size");
        }
    }
    auto product = [&](const std::vector<int> &factors) {
        Matrix p = Matrix::Identity(d, d);
        for (int f : factors) {
            p = p * matrices[f - 1];
        }
        return p;
    };
    Matrix lhs = product(phi.image());
    CommutatorExpansion exp = commutator_expansion(phi);
    Matrix rhs = product(Permutation::identity(n).image());
    for (const auto &term : exp.terms) {
        const Matrix &as = matrices[term.s - 1];
        const Matrix &at = matrices[term.t - 1];
        rhs += product(term.x) * (as * at - at * as) * product(term.y) * product(term.z);
    }
    return (lhs - rhs).cwiseAbs().maxCoeff();
}

}  // namespace cqpl::kraus
