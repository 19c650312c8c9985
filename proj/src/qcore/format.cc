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

#include "cqpl/qcore/format.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace cqpl::qcore {

std::string format_number(double v) {
    if (!std::isfinite(v)) {
        return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
    }
    if (v == 0.0) {
        return "0";
    }
    const double tol = 1e-9 * std::max(1.0, std::abs(v));
    char buf[64];
    for (int p = 1; p <= 17; p++) {
        std::snprintf(buf, sizeof buf, "%.*g", p, v);
        if (std::abs(std::strtod(buf, nullptr) - v) <= tol) {
            break;
        }
    }
    std::string s = buf;
    return s == "-0" ? "0" : s;
}

std::string format_ket(uint64_t pattern, int width) {
    std::string out = "|";
    for (int i = width - 1; i >= 0; i--) {
        out += ((pattern >> i) & 1) ? '1' : '0';
    }
    return out + ">";
}

std::string format_spectrum(std::span<const SpectrumEntry> entries, int width) {
    std::string out;
    for (size_t i = 0; i < entries.size(); i++) {
        if (i > 0) {
            out += ", ";
        }
        out += format_number(entries[i].probability) + " " + format_ket(entries[i].pattern, width);
    }
    return out;
}

}  // namespace cqpl::qcore
