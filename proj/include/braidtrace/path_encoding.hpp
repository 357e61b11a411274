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
 * Bitstring encoding of ladder paths.
 *
 * A string of n registers of beta bits drives the sampling walk: register t
 * is compared against a precomputed rounded cutoff for the current rung and
 * the walk steps up on values below the cutoff. The induced distribution on
 * paths is within 2n/2^beta of uniform in 1-norm. Crossing operators act on
 * register pairs; mixed segments rotate between lexicographically matched
 * partner strings, and the rounding excess is left fixed ("stuck").
 */

#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "braidtrace/braid.hpp"
#include "braidtrace/numeric.hpp"
#include "braidtrace/path_model.hpp"
#include "braidtrace/sparse_state.hpp"

namespace braidtrace {

/// Probability that the step after t steps at rung a goes up, given the walk
/// must end at rung h after n steps total. Exact rational; throws when the
/// state has no completion at all.
inline BigRat up_probability(int a, int t, int n, int k, int h) {
    detail::check_params(n, k, h);
    detail::check_rung(k, a);
    if (t < 0 || t >= n) throw std::invalid_argument("step index out of range");
    const int remaining = n - t - 1;  // steps left after taking step t+1
    BigInt qu = (a + 1 <= k - 1) ? path_count(k, remaining, a + 1, h) : BigInt(0);
    BigInt qd = (a - 1 >= 1) ? path_count(k, remaining, a - 1, h) : BigInt(0);
    if (qu + qd == 0) throw std::invalid_argument("state has no completion");
    return BigRat(qu, qu + qd);
}

/// Rounded cutoffs ceil(2^beta * p_up) for every rung/step state that is
/// reachable from rung 1 and can still complete to rung h.
struct EncodingTable {
    static constexpr uint64_t kNoEntry = ~0ull;

    int n = 0, k = 3, h = 1, beta = 1;
    std::vector<uint64_t> cut;  // (k-1) x n, row-major by rung

    uint64_t range() const { return 1ull << beta; }
    bool has(int a, int t) const {
        return a >= 1 && a <= k - 1 && t >= 0 && t < n && cut[(a - 1) * n + t] != kNoEntry;
    }
    uint64_t cutoff(int a, int t) const {
        uint64_t c = cut[(a - 1) * n + t];
        if (c == kNoEntry) throw std::invalid_argument("cutoff queried at unreachable state");
        return c;
    }
};

inline EncodingTable build_encoding_table(int n, int k, int h, int beta) {
    detail::check_params(n, k, h);
    if (beta < 1 || beta > kMaxPrecisionBits)
        throw std::invalid_argument("precision bits out of range");
    EncodingTable T;
    T.n = n;
    T.k = k;
    T.h = h;
    T.beta = beta;
    T.cut.assign((size_t)(k - 1) * n, EncodingTable::kNoEntry);
    for (int t = 0; t < n; ++t) {
        for (int a = 1; a <= k - 1; ++a) {
            if (path_count(k, t, 1, a) == 0) continue;
            const int remaining = n - t - 1;
            BigInt qu = (a + 1 <= k - 1) ? path_count(k, remaining, a + 1, h) : BigInt(0);
            BigInt qd = (a - 1 >= 1) ? path_count(k, remaining, a - 1, h) : BigInt(0);
            if (qu + qd == 0) continue;
            BigInt c = ceil_shifted_ratio(qu, qu + qd, beta);
            T.cut[(size_t)(a - 1) * n + t] = c.convert_to<uint64_t>();
        }
    }
    return T;
}

/// Total deterministic decode: register t selects step t+1 by cutoff
/// comparison at the current rung. Always lands in the target sector.
inline LadderPath decode_path(const BasisString& x, const EncodingTable& T) {
    if ((int)x.size() != T.n) throw std::invalid_argument("register count mismatch");
    LadderPath p;
    p.k = T.k;
    p.steps.resize(T.n);
    int a = 1;
    for (int t = 0; t < T.n; ++t) {
        if (x[t] < T.cutoff(a, t)) {
            p.steps[t] = 0;
            ++a;
        } else {
            p.steps[t] = 1;
            --a;
        }
    }
    return p;
}

/// Proven 1-norm bound 2n/2^beta on the distance between the decoded and
/// uniform path distributions.
inline double rounding_error_bound(int n, int beta) {
    return 2.0 * n * std::pow(2.0, -beta);
}

/// Exact preimage size of a path under decode: the product of the register
/// interval widths along its rungs.
inline BigInt decode_preimage_size(const LadderPath& p, const EncodingTable& T) {
    BigInt prod = 1;
    auto rungs = p.rungs();
    for (int t = 0; t < T.n; ++t) {
        uint64_t c = T.cutoff(rungs[t], t);
        prod *= (p.steps[t] == 0) ? BigInt(c) : BigInt(T.range() - c);
    }
    return prod;
}

/// 1-norm distance between the n-step distributions of the ideal and rounded
/// sampling chains started from the trivial path, computed exactly.
inline double chain_distance(int n, int k, int h, int beta) {
    EncodingTable T = build_encoding_table(n, k, h, beta);
    auto paths = enumerate_paths(n, k, h);
    if (paths.empty()) return 0.0;
    BigRat uniform(1, (long)paths.size());
    BigInt denom = BigInt(1) << (n * beta);
    BigRat l1 = 0;
    for (const auto& p : paths) {
        BigRat rounded(decode_preimage_size(p, T), denom);
        BigRat diff = uniform - rounded;
        if (diff < 0) diff = -diff;
        l1 += diff;
    }
    return to_double(l1);
}

/// 1-norm of one rounded-minus-ideal transition applied to the exact
/// distribution on t-step prefixes; bounded by 2/2^beta.
inline double rounded_step_l1_gap(int n, int k, int h, int beta, int t) {
    if (t < 0 || t >= n) throw std::invalid_argument("step index out of range");
    EncodingTable T = build_encoding_table(n, k, h, beta);
    BigInt total = path_count(k, n, 1, h);
    if (total == 0) return 0.0;
    BigRat l1 = 0;
    // Exact prefix probability: completions / total. Enumerate prefixes of t
    // steps as (rung, multiplicity of walks reaching it).
    std::vector<BigInt> walks(k + 1);
    walks[1] = 1;
    for (int s = 0; s < t; ++s) {
        std::vector<BigInt> next(k + 1);
        for (int a = 1; a <= k - 1; ++a) {
            if (walks[a] == 0) continue;
            if (a + 1 <= k - 1) next[a + 1] += walks[a];
            if (a - 1 >= 1) next[a - 1] += walks[a];
        }
        walks = next;
    }
    for (int a = 1; a <= k - 1; ++a) {
        if (walks[a] == 0 || !T.has(a, t)) continue;
        // Each of the walks[a] prefixes carries weight completions/total, and
        // they share the same one-step rounding gap at rung a.
        BigInt qu = (a + 1 <= k - 1) ? path_count(k, n - t - 1, a + 1, h) : BigInt(0);
        BigInt qd = (a - 1 >= 1) ? path_count(k, n - t - 1, a - 1, h) : BigInt(0);
        BigRat prefix_mass(walks[a] * (qu + qd), total);
        BigRat ideal_up(qu, qu + qd);
        BigRat rounded_up(BigInt(T.cutoff(a, t)), BigInt(1) << beta);
        BigRat gap = rounded_up - ideal_up;
        if (gap < 0) gap = -gap;
        l1 += prefix_mass * gap * 2;  // up and down rows shift oppositely
    }
    return to_double(l1);
}

namespace detail {

inline int k_top(const EncodingTable& T) { return T.k - 1; }

/// Classifies the two-register segment of crossing position i (1-based) for
/// a string whose walk sits at rung l before step i.
inline CrossingOutcome classify_path_crossing(const EncodingTable& T,
                                              const std::vector<CrossingCoefficients>& cc, int i,
                                              int l, uint32_t ri, uint32_t rj, int sign) {
    const uint64_t B = T.range();
    const uint64_t Ci = T.cutoff(l, i - 1);
    CrossingOutcome out;
    auto conj_if = [&](Complex z) { return sign < 0 ? std::conj(z) : z; };
    if (ri < Ci) {
        const uint64_t Cu = T.cutoff(l + 1, i);
        if (rj < Cu) {  // up-up
            out.diag = conj_if(cc[l].e);
            return out;
        }
        // up-down at rung l
        if (l == 1) {  // no down-up partner exists on the ladder
            out.diag = conj_if(cc[l].a);
            return out;
        }
        const uint64_t Cd = T.cutoff(l - 1, i);
        const uint64_t s_ud = Ci * (B - Cu);
        const uint64_t s_du = (B - Ci) * Cd;
        const uint64_t rank = ri * (B - Cu) + (rj - Cu);
        if (rank >= std::min(s_ud, s_du)) {
            out.kind = SegmentKind::stuck;
            out.diag = Complex(1, 0);
            return out;
        }
        out.kind = SegmentKind::rotation;
        out.diag = conj_if(cc[l].a);
        out.off = conj_if(cc[l].b);
        out.partner_ri = (uint32_t)(Ci + rank / Cd);
        out.partner_rj = (uint32_t)(rank % Cd);
        return out;
    }
    const uint64_t Cd = T.cutoff(l - 1, i);
    if (rj >= Cd) {  // down-down
        out.diag = conj_if(cc[l].f);
        return out;
    }
    // down-up at rung l
    if (l == k_top(T)) {  // no up-down partner exists on the ladder
        out.diag = conj_if(cc[l].c);
        return out;
    }
    const uint64_t Cu = T.cutoff(l + 1, i);
    const uint64_t s_ud = Ci * (B - Cu);
    const uint64_t s_du = (B - Ci) * Cd;
    const uint64_t rank = (ri - Ci) * Cd + rj;
    if (rank >= std::min(s_ud, s_du)) {
        out.kind = SegmentKind::stuck;
        out.diag = Complex(1, 0);
        return out;
    }
    out.kind = SegmentKind::rotation;
    out.diag = conj_if(cc[l].c);
    out.off = conj_if(cc[l].d);
    out.partner_ri = (uint32_t)(rank / (B - Cu));
    out.partner_rj = (uint32_t)(Cu + rank % (B - Cu));
    return out;
}

inline std::vector<CrossingCoefficients> coefficient_cache(int k) {
    std::vector<CrossingCoefficients> cc(k);
    for (int l = 1; l <= k - 1; ++l) cc[l] = crossing_coefficients(l, k);
    return cc;
}

inline int rung_before(const EncodingTable& T, const BasisString& x, int i) {
    int a = 1;
    for (int t = 0; t < i - 1; ++t) a += (x[t] < T.cutoff(a, t)) ? 1 : -1;
    return a;
}

}  // namespace detail

/// Applies the encoded crossing of strands i, i+1 (inverse for sign = -1).
/// Stuck strings are left fixed and flagged on the output state.
inline SparseAmplitudeState apply_encoded_crossing(const SparseAmplitudeState& state, int i,
                                                   int sign, const EncodingTable& T) {
    if (i < 1 || i > T.n - 1) throw std::invalid_argument("crossing position out of range");
    auto cc = detail::coefficient_cache(T.k);
    SparseAmplitudeState out;
    out.touched_stuck = state.touched_stuck;
    out.terms.reserve(state.terms.size() * 2);
    for (const auto& [x, amp] : state.terms) {
        int l = detail::rung_before(T, x, i);
        auto action = detail::classify_path_crossing(T, cc, i, l, x[i - 1], x[i], sign);
        out.terms.emplace_back(x, amp * action.diag);
        if (action.kind == detail::SegmentKind::rotation) {
            BasisString y = x;
            y[i - 1] = action.partner_ri;
            y[i] = action.partner_rj;
            out.terms.emplace_back(std::move(y), amp * action.off);
        } else if (action.kind == detail::SegmentKind::stuck) {
            out.touched_stuck = true;
        }
    }
    out.sort_and_combine();
    return out;
}

/// Applies the whole braid word (rightmost letter first) to a basis string.
inline SparseAmplitudeState apply_encoded_braid(const BraidWord& b, const EncodingTable& T,
                                                BasisString x) {
    SparseAmplitudeState state = SparseAmplitudeState::basis_state(std::move(x));
    for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it)
        state = apply_encoded_crossing(state, std::abs(*it), *it > 0 ? 1 : -1, T);
    return state;
}

namespace detail {

/// Fast evolution of a packed basis string (n*beta <= 24 bits) under the
/// encoded braid; appends diagonal amplitude of the evolved state at x.
struct PackedEvolver {
    const EncodingTable& T;
    std::vector<CrossingCoefficients> cc;
    int n, beta;
    std::vector<std::pair<uint32_t, Complex>> cur, nxt;

    explicit PackedEvolver(const EncodingTable& table)
        : T(table), cc(coefficient_cache(table.k)), n(table.n), beta(table.beta) {}

    uint32_t reg(uint32_t x, int t) const {
        return (x >> ((n - 1 - t) * beta)) & ((1u << beta) - 1);
    }
    uint32_t with_regs(uint32_t x, int t, uint32_t a, uint32_t b) const {
        const uint32_t mask = (1u << beta) - 1;
        int sa = (n - 1 - t) * beta, sb = (n - 2 - t) * beta;
        x &= ~((mask << sa) | (mask << sb));
        return x | (a << sa) | (b << sb);
    }
    int rung_before_packed(uint32_t x, int i) const {
        int a = 1;
        for (int t = 0; t < i - 1; ++t) a += (reg(x, t) < T.cutoff(a, t)) ? 1 : -1;
        return a;
    }

    /// <x|U(b)|x>; sets touched if the evolution ever hit a stuck string.
    Complex diagonal(const BraidWord& b, uint32_t x, bool* touched = nullptr) {
        cur.clear();
        cur.emplace_back(x, Complex(1, 0));
        for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) {
            const int i = std::abs(*it), sign = *it > 0 ? 1 : -1;
            nxt.clear();
            for (const auto& [y, amp] : cur) {
                int l = rung_before_packed(y, i);
                auto act = classify_path_crossing(T, cc, i, l, reg(y, i - 1), reg(y, i), sign);
                add_term(y, amp * act.diag);
                if (act.kind == SegmentKind::rotation)
                    add_term(with_regs(y, i - 1, act.partner_ri, act.partner_rj),
                             amp * act.off);
                else if (act.kind == SegmentKind::stuck && touched)
                    *touched = true;
            }
            std::swap(cur, nxt);
        }
        for (const auto& [y, amp] : cur)
            if (y == x) return amp;
        return Complex(0, 0);
    }

  private:
    void add_term(uint32_t key, Complex amp) {
        for (auto& [k2, a2] : nxt)
            if (k2 == key) {
                a2 += amp;
                return;
            }
        nxt.emplace_back(key, amp);
    }
};

}  // namespace detail

/// Exact encoded normalized trace 2^{-n beta} sum_x <x|U(b)|x> by exhaustive
/// summation over all basis strings. Guarded to n*beta <= 24 bits.
inline Complex encoded_normalized_trace(const BraidWord& b, int k, int h, int beta) {
    const int n = b.strands;
    if (n * beta > kMaxExactBits)
        throw std::invalid_argument("exact mode limited to n*beta <= 24 bits");
    EncodingTable T = build_encoding_table(n, k, h, beta);
    detail::PackedEvolver ev(T);
    const uint64_t total = 1ull << (n * beta);
    Complex sum = 0;
    for (uint64_t x = 0; x < total; ++x) sum += ev.diagonal(b, (uint32_t)x);
    return sum / (double)total;
}

/// Exact fraction of bitstrings stuck for at least one of the given crossing
/// positions (default: every position), plus the coarse estimate
/// 1 - (1 - 2^{-beta})^n.
struct StuckStats {
    double exact_fraction = 0;
    double estimate = 0;
    uint64_t stuck_count = 0;
    uint64_t total = 0;
};

inline StuckStats stuck_fraction(int n, int k, int h, int beta,
                                 std::vector<int> positions = {}) {
    if (n * beta > kMaxExactBits)
        throw std::invalid_argument("exact mode limited to n*beta <= 24 bits");
    EncodingTable T = build_encoding_table(n, k, h, beta);
    detail::PackedEvolver ev(T);
    auto cc = detail::coefficient_cache(k);
    if (positions.empty())
        for (int i = 1; i <= n - 1; ++i) positions.push_back(i);
    StuckStats st;
    st.total = 1ull << (n * beta);
    for (uint64_t x = 0; x < st.total; ++x) {
        for (int i : positions) {
            int l = ev.rung_before_packed((uint32_t)x, i);
            auto act = detail::classify_path_crossing(T, cc, i, l, ev.reg((uint32_t)x, i - 1),
                                                      ev.reg((uint32_t)x, i), 1);
            if (act.kind == detail::SegmentKind::stuck) {
                ++st.stuck_count;
                break;
            }
        }
    }
    st.exact_fraction = (double)st.stuck_count / (double)st.total;
    st.estimate = 1.0 - std::pow(1.0 - std::pow(2.0, -beta), n);
    return st;
}

}  // namespace braidtrace
