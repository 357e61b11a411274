// Copyright 2026 The braidtrace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <vector>

#include "braidtrace/numeric.hpp"

namespace braidtrace {

/// A basis bitstring of n registers of beta bits each, stored as register
/// values r_1..r_n (most significant block first within the bitstring).
using BasisString = std::vector<uint32_t>;

namespace detail {

enum class SegmentKind : uint8_t { phase, rotation, stuck };

/// Action of one encoded crossing on a single basis string: the amplitude on
/// the string itself and, for rotations, the partner string's register pair
/// and amplitude.
struct CrossingOutcome {
    SegmentKind kind = SegmentKind::phase;
    Complex diag{};
    Complex off{};
    uint32_t partner_ri = 0, partner_rj = 0;
};

}  // namespace detail

/// Finitely supported complex-amplitude map over basis bitstrings. Terms are
/// kept sorted by key with unique keys. touched_stuck records whether any
/// encoded crossing ever hit a stuck string while evolving this state.
struct SparseAmplitudeState {
    std::vector<std::pair<BasisString, Complex>> terms;
    bool touched_stuck = false;

    static SparseAmplitudeState basis_state(BasisString x) {
        SparseAmplitudeState s;
        s.terms.emplace_back(std::move(x), Complex(1, 0));
        return s;
    }

    Complex amplitude(const BasisString& x) const {
        auto it = std::lower_bound(terms.begin(), terms.end(), x,
                                   [](const auto& term, const BasisString& key) {
                                       return term.first < key;
                                   });
        if (it != terms.end() && it->first == x) return it->second;
        return Complex(0, 0);
    }

    double squared_norm() const {
        double s = 0;
        for (const auto& [key, amp] : terms) s += std::norm(amp);
        return s;
    }

    void sort_and_combine() {
        std::sort(terms.begin(), terms.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        size_t out = 0;
        for (size_t j = 0; j < terms.size(); ++j) {
            if (out > 0 && terms[out - 1].first == terms[j].first) {
                terms[out - 1].second += terms[j].second;
            } else {
                if (out != j) terms[out] = std::move(terms[j]);
                ++out;
            }
        }
        terms.resize(out);
    }
};

}  // namespace braidtrace
