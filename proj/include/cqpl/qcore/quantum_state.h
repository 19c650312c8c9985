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

#include <cstdint>
#include <random>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "cqpl/qcore/gates.h"

namespace cqpl::qcore {

/// Basis pattern over a list of qbits; the first listed qbit is the most
/// significant bit.
struct SpectrumEntry {
    uint64_t pattern;
    double probability;
};

inline constexpr double kSpectrumCutoff = 1e-12;

/// Pure state over the currently allocated heap qbits.
///
/// Heap indices are stable handles handed out by alloc(). Each allocated index
/// owns one tensor slot; slot s is bit s of an amplitude index. New qbits take
/// the highest slots, so allocation is a tensor extension that leaves existing
/// amplitudes in place.
class QuantumState {
   public:
    static constexpr int kDefaultHeap = 200;
    static constexpr int kDefaultSimCap = 24;

    explicit QuantumState(int heap_capacity = kDefaultHeap, int sim_cap = kDefaultSimCap);

    /// Allocates n qbits in basis state |pattern> (first new qbit = MSB).
    std::vector<int> alloc(int n, uint64_t pattern = 0);

    void apply(const Matrix &u, std::span<const int> targets);

    /// Samples an outcome, projects and renormalizes. Measured qbits stay
    /// allocated.
    uint64_t measure(std::span<const int> targets, std::mt19937_64 &rng);

    /// Projects onto `pattern` and renormalizes. Returns the probability the
    /// projection had; throws E_INTERNAL if it was zero.
    double collapse(std::span<const int> targets, uint64_t pattern);

    /// Marginal distribution over `targets`, ascending by pattern, with
    /// entries below kSpectrumCutoff dropped. Does not modify the state.
    std::vector<SpectrumEntry> spectrum(std::span<const int> targets) const;

    double probability(std::span<const int> targets, uint64_t pattern) const;

    /// Measures the qbits, removes their slots and recycles their indices.
    void release(std::span<const int> indices, std::mt19937_64 &rng);

    int allocated() const {
        return static_cast<int>(heap_of_slot_.size());
    }
    int heap_capacity() const {
        return capacity_;
    }
    int sim_cap() const {
        return sim_cap_;
    }
    bool is_allocated(int index) const;
    int slot_of(int index) const;
    /// Allocated heap indices in slot order.
    const std::vector<int> &heap_of_slot() const {
        return heap_of_slot_;
    }
    const std::vector<Complex> &amplitudes() const {
        return amps_;
    }
    double norm() const;

   private:
    std::vector<int> slots_for(std::span<const int> targets, const char *what) const;
    uint64_t extract(uint64_t index, const std::vector<int> &slots) const;
    void remove_slots(std::vector<int> slots, uint64_t values);

    int capacity_;
    int sim_cap_;
    std::vector<Complex> amps_{Complex(1.0, 0.0)};
    std::vector<int> heap_of_slot_;
    std::vector<int> slot_of_heap_;  // -1 when free
    std::set<int> free_;
    int next_fresh_ = 0;
};

}  // namespace cqpl::qcore
