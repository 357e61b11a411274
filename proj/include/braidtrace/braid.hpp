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

/**
 * @file
 * Braid words: signed generator sequences in B_n, parsing, and the two
 * Markov moves on trace closures.
 */

#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braidtrace {

/// A braid in B_n as a sequence of signed generator indices.
/// Letter g > 0 means the elementary crossing of strands |g| and |g|+1;
/// g < 0 is its inverse. The empty sequence is the identity braid.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int n, std::vector<int> ls) : strands(n), letters(std::move(ls)) {
        validate();
    }

    void validate() const {
        if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
        for (int g : letters) {
            if (g == 0 || std::abs(g) > strands - 1)
                throw std::invalid_argument("generator index " + std::to_string(g) +
                                            " out of range for " + std::to_string(strands) +
                                            " strands");
        }
    }

    bool operator==(const BraidWord& o) const {
        return strands == o.strands && letters == o.letters;
    }
};

/// Parses whitespace-separated signed integers as a braid word on `strands` strands.
inline BraidWord parse_braid(std::string_view text, int strands) {
    std::vector<int> letters;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        size_t pos = 0;
        int g;
        try {
            g = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed braid token '" + tok + "'");
        }
        if (pos != tok.size()) throw std::invalid_argument("malformed braid token '" + tok + "'");
        letters.push_back(g);
    }
    return BraidWord(strands, std::move(letters));
}

inline std::string to_string(const BraidWord& b) {
    std::string out;
    for (size_t i = 0; i < b.letters.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(b.letters[i]);
    }
    return out;
}

/// Sum of exponents e(b) of the word.
inline int exponent_sum(const BraidWord& b) {
    int e = 0;
    for (int g : b.letters) e += (g > 0) ? 1 : -1;
    return e;
}

/// Writhe of the trace closure with every strand oriented downward: w = -e(b).
inline int closure_writhe(const BraidWord& b) { return -exponent_sum(b); }

/// Markov move I: returns a * b * a^{-1}, whose trace closure equals b's.
inline BraidWord markov_conjugate(const BraidWord& b, const BraidWord& a) {
    if (a.strands != b.strands)
        throw std::invalid_argument("conjugating braid must live on the same strand count");
    std::vector<int> w;
    w.reserve(b.letters.size() + 2 * a.letters.size());
    w.insert(w.end(), a.letters.begin(), a.letters.end());
    w.insert(w.end(), b.letters.begin(), b.letters.end());
    for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it) w.push_back(-*it);
    return BraidWord(b.strands, std::move(w));
}

/// Markov move II: returns b * sigma_n^{sign} on n+1 strands.
inline BraidWord markov_stabilize(const BraidWord& b, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("stabilization sign must be +/-1");
    std::vector<int> w = b.letters;
    w.push_back(sign * b.strands);
    return BraidWord(b.strands + 1, std::move(w));
}

}  // namespace braidtrace
