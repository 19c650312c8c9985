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

#include "cqpl/qcore/quantum_state.h"

#include <cmath>
#include <map>
#include <string>

#include "cqpl/error.h"

namespace cqpl::qcore {

QuantumState::QuantumState(int heap_capacity, int sim_cap) : capacity_(heap_capacity), sim_cap_(sim_cap) {
    if (heap_capacity < 1 || sim_cap < 1) {
        throw Error(ErrorCode::E_BAD_PARAM, "heap capacity and simulation cap must be positive");
    }
}

bool QuantumState::is_allocated(int index) const {
    return index >= 0 && index < static_cast<int>(slot_of_heap_.size()) && slot_of_heap_[index] >= 0;
}

int QuantumState::slot_of(int index) const {
    if (!is_allocated(index)) {
        throw Error(ErrorCode::E_INTERNAL, "heap index " + std::to_string(index) + " is not allocated");
    }
    return slot_of_heap_[index];
}

std::vector<int> QuantumState::alloc(int n, uint64_t pattern) {
    if (n < 0) {
        throw Error(ErrorCode::E_INTERNAL, "negative allocation");
    }
    if (allocated() + n > capacity_) {
        throw Error(ErrorCode::E_HEAP_EXHAUSTED, "quantum heap exhausted: " + std::to_string(allocated()) + " + " +
                                                     std::to_string(n) + " qbits exceed the heap size of " +
                                                     std::to_string(capacity_));
    }
    if (allocated() + n > sim_cap_) {
        throw Error(ErrorCode::E_SIM_CAP, "simulating " + std::to_string(allocated() + n) +
                                              " qbits exceeds the simulation cap of " + std::to_string(sim_cap_));
    }
    std::vector<int> out;
    out.reserve(n);
    for (int i = 0; i < n; i++) {
        int idx;
        if (!free_.empty()) {
            idx = *free_.begin();
            free_.erase(free_.begin());
        } else {
            idx = next_fresh_++;
        }
        if (idx >= static_cast<int>(slot_of_heap_.size())) {
            slot_of_heap_.resize(idx + 1, -1);
        }
        int slot = allocated();
        slot_of_heap_[idx] = slot;
        heap_of_slot_.push_back(idx);

        bool one = (pattern >> (n - 1 - i)) & 1;
        std::vector<Complex> next(amps_.size() * 2, Complex(0.0, 0.0));
        size_t offset = one ? amps_.size() : 0;
        std::copy(amps_.begin(), amps_.end(), next.begin() + offset);
        amps_ = std::move(next);
        out.push_back(idx);
    }
    return out;
}

std::vector<int> QuantumState::slots_for(std::span<const int> targets, const char *what) const {
    std::vector<int> slots;
    slots.reserve(targets.size());
    for (int t : targets) {
        int s = slot_of(t);
        for (int prev : slots) {
            if (prev == s) {
                throw Error(ErrorCode::E_DUP_TUPLE, std::string(what) + ": duplicate target qbit");
            }
        }
        slots.push_back(s);
    }
    return slots;
}

uint64_t QuantumState::extract(uint64_t index, const std::vector<int> &slots) const {
    uint64_t v = 0;
    for (int s : slots) {
        v = (v << 1) | ((index >> s) & 1);
    }
    return v;
}

void QuantumState::apply(const Matrix &u, std::span<const int> targets) {
    const int k = static_cast<int>(targets.size());
    if (u.rows() != u.cols() || u.rows() != (Eigen::Index{1} << k)) {
        throw Error(ErrorCode::E_DIM_MISMATCH, "a " + std::to_string(u.rows()) + "x" + std::to_string(u.cols()) +
                                                   " operator cannot act on " + std::to_string(k) + " qbit(s)");
    }
    std::vector<int> slots = slots_for(targets, "apply");
    const size_t dim = size_t{1} << k;
    std::vector<uint64_t> offsets(dim, 0);
    uint64_t mask = 0;
    for (size_t r = 0; r < dim; r++) {
        for (int j = 0; j < k; j++) {
            if ((r >> (k - 1 - j)) & 1) {
                offsets[r] |= uint64_t{1} << slots[j];
            }
        }
    }
    for (int s : slots) {
        mask |= uint64_t{1} << s;
    }
    std::vector<Complex> in(dim), out(dim);
    for (uint64_t base = 0; base < amps_.size(); base++) {
        if (base & mask) {
            continue;
        }
        for (size_t r = 0; r < dim; r++) {
            in[r] = amps_[base | offsets[r]];
        }
        for (size_t r = 0; r < dim; r++) {
            Complex acc(0.0, 0.0);
            for (size_t c = 0; c < dim; c++) {
                acc += u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * in[c];
            }
            out[r] = acc;
        }
        for (size_t r = 0; r < dim; r++) {
            amps_[base | offsets[r]] = out[r];
        }
    }
}

std::vector<SpectrumEntry> QuantumState::spectrum(std::span<const int> targets) const {
    std::vector<int> slots = slots_for(targets, "spectrum");
    std::map<uint64_t, double> acc;
    for (uint64_t i = 0; i < amps_.size(); i++) {
        double p = std::norm(amps_[i]);
        if (p != 0.0) {
            acc[extract(i, slots)] += p;
        }
    }
    std::vector<SpectrumEntry> out;
    for (auto [pattern, p] : acc) {
        if (p >= kSpectrumCutoff) {
            out.push_back({pattern, p});
        }
    }
    return out;
}

double QuantumState::probability(std::span<const int> targets, uint64_t pattern) const {
    std::vector<int> slots = slots_for(targets, "probability");
    double p = 0.0;
    for (uint64_t i = 0; i < amps_.size(); i++) {
        if (extract(i, slots) == pattern) {
            p += std::norm(amps_[i]);
        }
    }
    return p;
}

double QuantumState::collapse(std::span<const int> targets, uint64_t pattern) {
    std::vector<int> slots = slots_for(targets, "measure");
    double p = 0.0;
    for (uint64_t i = 0; i < amps_.size(); i++) {
        if (extract(i, slots) == pattern) {
            p += std::norm(amps_[i]);
        } else {
            amps_[i] = 0.0;
        }
    }
    if (p <= 0.0) {
        throw Error(ErrorCode::E_INTERNAL, "projection onto an outcome of probability zero");
    }
    const double scale = 1.0 / std::sqrt(p);
    for (auto &a : amps_) {
        a *= scale;
    }
    return p;
}

uint64_t QuantumState::measure(std::span<const int> targets, std::mt19937_64 &rng) {
    std::vector<int> slots = slots_for(targets, "measure");
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double u = unit(rng);
    double cumulative = 0.0;
    uint64_t chosen = 0;
    bool found = false;
    std::vector<SpectrumEntry> entries = spectrum(targets);
    for (const auto &e : entries) {
        cumulative += e.probability;
        if (u < cumulative) {
            chosen = e.pattern;
            found = true;
            break;
        }
    }
    if (!found) {
        // rounding left u above the last cumulative sum
        chosen = entries.back().pattern;
    }
    collapse(targets, chosen);
    return chosen;
}

void QuantumState::remove_slots(std::vector<int> slots, uint64_t values) {
    // values: bit (k-1-j) is the fixed value of slots[j]
    const int k = static_cast<int>(slots.size());
    uint64_t fixed_mask = 0, fixed_bits = 0;
    for (int j = 0; j < k; j++) {
        fixed_mask |= uint64_t{1} << slots[j];
        if ((values >> (k - 1 - j)) & 1) {
            fixed_bits |= uint64_t{1} << slots[j];
        }
    }
    const int m = allocated();
    std::vector<int> kept;
    for (int s = 0; s < m; s++) {
        if (!((fixed_mask >> s) & 1)) {
            kept.push_back(s);
        }
    }
    std::vector<Complex> next(size_t{1} << kept.size());
    for (uint64_t ni = 0; ni < next.size(); ni++) {
        uint64_t old = fixed_bits;
        for (size_t j = 0; j < kept.size(); j++) {
            if ((ni >> j) & 1) {
                old |= uint64_t{1} << kept[j];
            }
        }
        next[ni] = amps_[old];
    }
    amps_ = std::move(next);

    std::vector<int> heap;
    for (int s : kept) {
        heap.push_back(heap_of_slot_[s]);
    }
    for (int s : slots) {
        int idx = heap_of_slot_[s];
        slot_of_heap_[idx] = -1;
        free_.insert(idx);
    }
    heap_of_slot_ = std::move(heap);
    for (size_t s = 0; s < heap_of_slot_.size(); s++) {
        slot_of_heap_[heap_of_slot_[s]] = static_cast<int>(s);
    }
}

void QuantumState::release(std::span<const int> indices, std::mt19937_64 &rng) {
    if (indices.empty()) {
        return;
    }
    uint64_t outcome = measure(indices, rng);
    remove_slots(slots_for(indices, "release"), outcome);
}

double QuantumState::norm() const {
    double s = 0.0;
    for (const auto &a : amps_) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

}  // namespace cqpl::qcore
