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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "../oracle/density_oracle.h"
#include "../support/test_support.h"
#include "cqpl/qcore/format.h"
#include "cqpl/qcore/gates.h"
#include "cqpl/qcore/quantum_state.h"

namespace {

using namespace cqpl;
using namespace cqpl::qcore;

constexpr double kTol = 1e-12;

// Amplitude of basis pattern `v` over `order` (first listed qbit most significant).
Complex amplitude(const QuantumState &s, const std::vector<int> &order, uint64_t v) {
    uint64_t raw = 0;
    const size_t n = order.size();
    for (size_t j = 0; j < n; j++) {
        if ((v >> (n - 1 - j)) & 1) {
            raw |= uint64_t{1} << s.slot_of(order[j]);
        }
    }
    return s.amplitudes().at(raw);
}

void expect_amps(const QuantumState &s, const std::vector<int> &order, const std::vector<Complex> &want) {
    ASSERT_EQ(s.amplitudes().size(), want.size());
    for (uint64_t v = 0; v < want.size(); v++) {
        EXPECT_NEAR(std::abs(amplitude(s, order, v) - want[v]), 0.0, kTol) << "pattern " << v;
    }
}

double max_diff(const Matrix &a, const Matrix &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

TEST(Alloc, BasisStates) {
    QuantumState s;
    auto q = s.alloc(1, 0);
    ASSERT_EQ(q.size(), 1u);
    expect_amps(s, q, {1, 0});
    QuantumState t;
    auto pair = t.alloc(2, 0b01);
    expect_amps(t, pair, {0, 1, 0, 0});
}

TEST(Alloc, TensorExtensionKeepsExistingAmplitudes) {
    QuantumState s;
    auto a = s.alloc(1, 0);
    s.apply(hadamard(), a);
    auto b = s.alloc(1, 1);
    const double r = 1 / std::sqrt(2.0);
    expect_amps(s, {a[0], b[0]}, {0, r, 0, r});
}

TEST(Alloc, Budgets) {
    QuantumState s(3, 24);
    s.alloc(3, 0);
    try {
        s.alloc(1, 0);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::E_HEAP_EXHAUSTED);
    }
    QuantumState c(200, 4);
    c.alloc(4, 0);
    try {
        c.alloc(1, 0);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::E_SIM_CAP);
    }
}

TEST(Apply, Examples) {
    QuantumState s;
    auto q = s.alloc(1, 0);
    s.apply(hadamard(), q);
    const double r = 1 / std::sqrt(2.0);
    expect_amps(s, q, {r, r});

    QuantumState c;
    auto ab = c.alloc(2, 0b10);
    c.apply(cnot(), ab);
    expect_amps(c, ab, {0, 0, 0, 1});

    QuantumState f;
    auto pair = f.alloc(2, 0);
    f.apply(ft(2), pair);
    expect_amps(f, pair, {0.5, 0.5, 0.5, 0.5});
}

TEST(Apply, TargetOrderIsSignificant) {
    QuantumState s;
    auto q = s.alloc(2, 0b01);
    std::vector<int> reversed = {q[1], q[0]};
    s.apply(cnot(), reversed);
    expect_amps(s, q, {0, 0, 0, 1});
}

TEST(BuiltinGates, Identities) {
    EXPECT_LT(max_diff(ft(1), hadamard()), kTol);
    EXPECT_LT(max_diff(phase(0), Matrix::Identity(2, 2)), kTol);
    EXPECT_LT(max_diff(pauli_x() * pauli_x(), Matrix::Identity(2, 2)), kTol);
    EXPECT_LT(max_diff(ft(3), oracle::hadamard_power(3)), kTol);
    EXPECT_LT(max_diff(phase(0.7), oracle::phase(0.7)), kTol);
    EXPECT_LT(max_diff(cnot(), oracle::cnot()), kTol);
    EXPECT_LT(max_diff(builtin_gate("Not"), oracle::x()), kTol);
}

TEST(BuiltinGates, BadParameters) {
    try {
        ft(0);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::E_BAD_PARAM);
    }
}

TEST(BuiltinGates, Unitarity) {
    for (auto m : {hadamard(), pauli_x(), cnot(), phase(1.3), phase(-4), ft(1), ft(4), ft(kMaxDenseFT)}) {
        EXPECT_LE(unitarity_error(m), 1e-12);
    }
}

TEST(Measure, Examples) {
    std::mt19937_64 rng(1);
    QuantumState one;
    auto q = one.alloc(1, 1);
    EXPECT_EQ(one.measure(q, rng), 1u);
    EXPECT_EQ(one.allocated(), 1);

    for (uint64_t seed = 0; seed < 50; seed++) {
        std::mt19937_64 g(seed);
        QuantumState epr;
        auto ab = epr.alloc(2, 0);
        epr.apply(hadamard(), std::vector<int>{ab[0]});
        epr.apply(cnot(), ab);
        uint64_t v = epr.measure(std::vector<int>{ab[0]}, g);
        EXPECT_EQ(epr.probability(std::vector<int>{ab[1]}, v), 1.0);
        EXPECT_EQ(epr.measure(std::vector<int>{ab[1]}, g), v);
    }
}

TEST(Measure, StatisticsWithinThreeSigma) {
    std::mt19937_64 rng(2024);
    QuantumState s;
    auto q = s.alloc(2, 0);
    s.apply(testing_support::random_unitary(rng, 4), q);
    const int trials = 100000;
    std::vector<int> counts(4, 0);
    for (int i = 0; i < trials; i++) {
        QuantumState copy = s;
        counts[copy.measure(q, rng)]++;
    }
    for (uint64_t v = 0; v < 4; v++) {
        double p = std::norm(amplitude(s, q, v));
        double sigma = std::sqrt(p * (1 - p) / trials);
        EXPECT_LE(std::abs(counts[v] / double(trials) - p), 3 * sigma + 1e-12) << "pattern " << v;
    }
}

TEST(Spectrum, Examples) {
    QuantumState s;
    auto ab = s.alloc(2, 0);
    s.apply(ft(2), ab);
    auto sp = s.spectrum(ab);
    ASSERT_EQ(sp.size(), 4u);
    for (uint64_t v = 0; v < 4; v++) {
        EXPECT_EQ(sp[v].pattern, v);
        EXPECT_NEAR(sp[v].probability, 0.25, kTol);
    }
    EXPECT_EQ(format_spectrum(sp, 2), "0.25 |00>, 0.25 |01>, 0.25 |10>, 0.25 |11>");

    s.collapse(std::vector<int>{ab[0]}, 0);
    auto b = s.spectrum(std::vector<int>{ab[1]});
    EXPECT_EQ(format_spectrum(b, 1), "0.5 |0>, 0.5 |1>");

    QuantumState fresh;
    auto f = fresh.alloc(1, 0);
    EXPECT_EQ(format_spectrum(fresh.spectrum(f), 1), "1 |0>");
}

TEST(Spectrum, OmitsNegligibleEntries) {
    QuantumState s;
    auto q = s.alloc(1, 0);
    s.apply(phase(0.3), q);
    EXPECT_EQ(s.spectrum(q).size(), 1u);
}

TEST(Format, Numbers) {
    EXPECT_EQ(format_number(1), "1");
    EXPECT_EQ(format_number(0.5), "0.5");
    EXPECT_EQ(format_number(0.25), "0.25");
    EXPECT_EQ(format_number(1.0 / 3), "0.333333333");
    EXPECT_EQ(format_ket(0b01, 2), "|01>");
}

TEST(Release, Examples) {
    std::mt19937_64 rng(3);
    QuantumState s;
    auto q = s.alloc(1, 0);
    auto keep = s.alloc(1, 1);
    s.release(q, rng);
    EXPECT_EQ(s.amplitudes().size(), 2u);
    EXPECT_NEAR(s.norm(), 1.0, 1e-12);
    EXPECT_FALSE(s.is_allocated(q[0]));

    s.release(keep, rng);
    ASSERT_EQ(s.amplitudes().size(), 1u);
    EXPECT_NEAR(std::abs(s.amplitudes()[0] - Complex(1, 0)), 0.0, kTol);

    for (uint64_t seed = 0; seed < 20; seed++) {
        std::mt19937_64 g(seed);
        QuantumState epr;
        auto ab = epr.alloc(2, 0);
        epr.apply(hadamard(), std::vector<int>{ab[0]});
        epr.apply(cnot(), ab);
        epr.release(std::vector<int>{ab[0]}, g);
        auto sp = epr.spectrum(std::vector<int>{ab[1]});
        ASSERT_EQ(sp.size(), 1u);
        EXPECT_NEAR(sp[0].probability, 1.0, kTol);
    }
}

TEST(Release, IndicesReturnToFreeList) {
    std::mt19937_64 rng(3);
    QuantumState s(2, 24);
    auto a = s.alloc(2, 0);
    s.release(std::vector<int>{a[0]}, rng);
    auto b = s.alloc(1, 0);
    EXPECT_EQ(b[0], a[0]);
}

// Random alloc/apply/measure/release sequences against the density-matrix oracle.
TEST(Properties, NormAndOracleAgreement) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> coin(0, 1), op(0, 3);
    for (int trial = 0; trial < 200; trial++) {
        QuantumState s;
        oracle::DensityOracle o;
        std::vector<int> heap;
        const int m = 1 + trial % 4;
        for (int i = 0; i < m; i++) {
            int b = coin(rng);
            heap.push_back(s.alloc(1, static_cast<uint64_t>(b))[0]);
            o.alloc(b);
        }
        for (int step = 0; step < 10; step++) {
            std::vector<int> idx(static_cast<size_t>(m));
            std::iota(idx.begin(), idx.end(), 0);
            std::shuffle(idx.begin(), idx.end(), rng);
            std::uniform_int_distribution<int> w(1, std::min(m, 2));
            idx.resize(static_cast<size_t>(w(rng)));
            std::vector<int> targets;
            for (int i : idx) {
                targets.push_back(heap[static_cast<size_t>(i)]);
            }
            if (op(rng) < 3) {
                Matrix u = testing_support::random_unitary(rng, 1 << idx.size());
                s.apply(u, targets);
                o.apply(u, idx);
            } else {
                uint64_t v = s.measure(targets, rng);
                o.project(idx, v);
            }
            ASSERT_NEAR(s.norm(), 1.0, 1e-9);
            std::vector<int> all(static_cast<size_t>(m));
            std::iota(all.begin(), all.end(), 0);
            auto want = o.marginal(all);
            std::vector<double> got(want.size(), 0.0);
            for (const auto &e : s.spectrum(heap)) {
                got[e.pattern] = e.probability;
            }
            for (size_t k = 0; k < want.size(); k++) {
                EXPECT_NEAR(got[k], want[k] < 1e-12 ? 0.0 : want[k], 1e-10);
            }
        }
        s.release(heap, rng);
        EXPECT_NEAR(s.norm(), 1.0, 1e-9);
    }
}

TEST(Properties, DisjointGatesCommute) {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> size(2, 6);
    for (int trial = 0; trial < 100; trial++) {
        const int m = size(rng);
        std::vector<int> order(static_cast<size_t>(m));
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        std::uniform_int_distribution<int> split(1, m - 1);
        const int k = split(rng);
        std::vector<int> ta(order.begin(), order.begin() + k), tb(order.begin() + k, order.end());
        if (ta.size() > 3) ta.resize(3);
        if (tb.size() > 3) tb.resize(3);
        Matrix u = testing_support::random_unitary(rng, 1 << ta.size());
        Matrix v = testing_support::random_unitary(rng, 1 << tb.size());
        Matrix init = testing_support::random_unitary(rng, 1 << std::min(m, 3));
        QuantumState s1, s2;
        auto q1 = s1.alloc(m, 0), q2 = s2.alloc(m, 0);
        std::vector<int> first(q1.begin(), q1.begin() + std::min(m, 3));
        s1.apply(init, first);
        s2.apply(init, first);
        s1.apply(u, ta);
        s1.apply(v, tb);
        s2.apply(v, tb);
        s2.apply(u, ta);
        for (size_t i = 0; i < s1.amplitudes().size(); i++) {
            EXPECT_NEAR(std::abs(s1.amplitudes()[i] - s2.amplitudes()[i]), 0.0, 1e-12);
        }
    }
}

}  // namespace
