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

#include "cqpl/qcore/quantum_state.h"

namespace cqpl::qcore {

/// Shortest %g rendering that reads back within 1e-9 (relative for large
/// magnitudes), so 0.25 prints as "0.25" and 1.0 as "1".
std::string format_number(double v);

/// Ket label for a pattern of `width` qbits, e.g. "|01>".
std::string format_ket(uint64_t pattern, int width);

/// "0.25 |00>, 0.25 |01>" for the given spectrum over `width` qbits.
std::string format_spectrum(std::span<const SpectrumEntry> entries, int width);

}  // namespace cqpl::qcore
