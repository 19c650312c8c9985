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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cqpl/kraus/kraus_set.h"

namespace cqpl::kraus {

/// Bijection on 1..n stored as its image list: "52314" means phi(1)=5,
/// phi(2)=2, and so on.
class Permutation {
   public:
    explicit Permutation(std::vector<int> image);
    /// Parses a digit string such as "1432" (n <= 9).
    static Permutation parse(std::string_view digits);
    static Permutation identity(int n);

    int size() const {
        return static_cast<int>(image_.size());
    }
    /// phi(i), 1-based.
    int operator()(int i) const {
        return image_[i - 1];
    }
    /// phi^-1(v), 1-based.
    int inverse(int v) const {
        return inverse_[v - 1];
    }
    const std::vector<int> &image() const {
        return image_;
    }

   private:
    std::vector<int> image_;
    std::vector<int> inverse_;
};

struct Inversion {
    int s;
    int t;
    bool operator==(const Inversion &) const = default;
};

/// Pairs t < s with s placed left of t, scanned left to right through the
/// permuted list.
std::vector<Inversion> inversions(const Permutation &phi);

/// One correction term X [A_s, A_t] Y Z. Positions are indices i into the
/// permuted list; factors are the matrix indices multiplied, in order.
struct CommutatorTerm {
    int s;
    int t;
    std::vector<int> x_positions;
    std::vector<int> y_positions;
    std::vector<int> x;
    std::vector<int> y;
    std::vector<int> z;
};

/// A_phi(1) ... A_phi(n) = A_1 ... A_n + sum of terms, ordered by s then t,
/// both descending.
struct CommutatorExpansion {
    Permutation phi;
    std::vector<CommutatorTerm> terms;

    /// "1432 = 1234 + 1[4,3]2 + 13[4,2] + 1[3,2]4"
    std::string to_string() const;
};

CommutatorExpansion commutator_expansion(const Permutation &phi);

/// Max-entry norm of LHS - RHS for the given matrices A_1..A_n. Throws E_DIM
/// unless there are n square matrices of one size.
double verify_commutator_identity(std::span<const Matrix> matrices, const Permutation &phi);

}  // namespace cqpl::kraus
