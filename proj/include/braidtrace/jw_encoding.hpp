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
 * Bitstring encoding of standard Young tableaux.
 *
 * Register t selects the row of box t+1 by comparing against cumulative
 * rounded cutoffs of the row-choice distribution; the cutoffs depend only on
 * the current profile, the step index, and the target shape. Crossing
 * operators rotate between lexicographically matched register pairs of the
 * box-swapped configurations, leaving the rounding excess fixed.
 */

#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "braidtrace/braid.hpp"
#include "braidtrace/jones_wenzl.hpp"
#include "braidtrace/numeric.hpp"
#include "braidtrace/sparse_state.hpp"

namespace braidtrace {

/// Probability that box t+1 (after t boxes placed, profile p) goes to the
/// given row, when growing toward the target shape. Exact rational; zero for
/// inadmissible moves, throws if the state itself has no completion.
inline BigRat row_probability(const Profile& p, int t, int row, const YoungDiagram& target,
                              int k, int r) {
    detail::check_kr(k, r);
    const int n = target.boxes();
    if (t < 0 || t >= n) throw std::invalid_argument("step index out of range");
    BigInt denom = completion_count(p, target, n - t, k, r);
    if (denom == 0) throw std::invalid_argument("state has no completion");
    auto q = profile_add_box(p, row, k, r);
    if (!q) return BigRat(0);
    return BigRat(completion_count(*q, target, n - t - 1, k, r), denom);
}

/// Cumulative rounded row cutoffs for every reachable profile/step state of
/// the sampler targeting one shape.
struct RowCutoffTable {
    static constexpr uint64_t kNoEntry = ~0ull;

    int n = 0, k = 3, r = 2, beta = 1;
    YoungDiagram shape;
    std::vector<Profile> profiles;        // lexicographic order; id = index
    std::vector<std::vector<int>> child;  // child[pid][row-1] = pid after adding a box, or -1
    std::vector<uint64_t> cut;            // (profiles x n x (r+1)), kNoEntry marks unreachable

    uint64_t range() const { return 1ull << beta; }
    int profile_id(const Profile& p) const {
        auto it = std::lower_bound(profiles.begin(), profiles.end(), p);
        if (it == profiles.end() || !(*it == p))
            throw std::invalid_argument("profile out of range");
        return (int)(it - profiles.begin());
    }
    size_t slot(int pid, int t, int j) const {
        return ((size_t)pid * n + t) * (r + 1) + j;
    }
    bool has(int pid, int t) const { return cut[slot(pid, t, 0)] != kNoEntry; }
    uint64_t cutoff(int pid, int t, int j) const {
        uint64_t c = cut[slot(pid, t, j)];
        if (c == kNoEntry) throw std::invalid_argument("cutoff queried at unreachable state");
        return c;
    }
    uint64_t interval_width(int pid, int t, int row) const {
        return cutoff(pid, t, row) - cutoff(pid, t, row - 1);
    }
    /// Row lengths of the diagram with `boxes` boxes and this profile.
    std::array<int, 16> row_lengths(int pid, int boxes) const {
        const Profile& p = profiles[pid];
        std::array<int, 16> b{};
        int suffix = 0, total_excess = 0;
        std::array<int, 16> suf{};
        for (int j = r - 1; j >= 1; --j) {
            suffix += p.overhang[j - 1];
            suf[j] = suffix;  // b_j - b_r
        }
        for (int j = 1; j <= r; ++j) total_excess += (j <= r - 1) ? suf[j] : 0;
        int base = (boxes - total_excess) / r;
        for (int j = 1; j <= r; ++j) b[j] = base + ((j <= r - 1) ? suf[j] : 0);
        return b;
    }
};

inline RowCutoffTable build_row_cutoffs(const YoungDiagram& shape, int k, int r, int beta) {
    detail::check_kr(k, r);
    if (beta < 1 || beta > kMaxPrecisionBits)
        throw std::invalid_argument("precision bits out of range");
    if ((int)shape.rows.size() > r) throw std::invalid_argument("shape has more than r rows");
    if (shape.row_length(1) - shape.row_length(r) > k - r)
        throw std::invalid_argument("shape violates the row-spread bound");
    RowCutoffTable T;
    T.n = shape.boxes();
    T.k = k;
    T.r = r;
    T.beta = beta;
    T.shape = shape;
    T.profiles = enumerate_profiles(k, r);
    const int np = (int)T.profiles.size();
    T.child.assign(np, std::vector<int>(r, -1));
    for (int pid = 0; pid < np; ++pid)
        for (int row = 1; row <= r; ++row)
            if (auto q = profile_add_box(T.profiles[pid], row, k, r)) {
                auto it = std::lower_bound(T.profiles.begin(), T.profiles.end(), *q);
                T.child[pid][row - 1] = (int)(it - T.profiles.begin());
            }
    // Completions toward the target profile: comp[t][pid] counts admissible
    // walks of n - t further steps ending at the target.
    const int goal = T.profile_id(profile_of(shape, r));
    std::vector<std::vector<BigInt>> comp(T.n + 1, std::vector<BigInt>(np));
    comp[T.n][goal] = 1;
    for (int t = T.n - 1; t >= 0; --t)
        for (int pid = 0; pid < np; ++pid)
            for (int row = 1; row <= r; ++row)
                if (int c = T.child[pid][row - 1]; c >= 0) comp[t][pid] += comp[t + 1][c];
    // Forward reachability from the empty profile.
    std::vector<std::vector<char>> reach(T.n + 1, std::vector<char>(np, 0));
    Profile empty;
    empty.overhang.assign(r - 1, 0);
    reach[0][T.profile_id(empty)] = 1;
    for (int t = 0; t < T.n; ++t)
        for (int pid = 0; pid < np; ++pid)
            if (reach[t][pid] && comp[t][pid] > 0)
                for (int row = 1; row <= r; ++row)
                    if (int c = T.child[pid][row - 1]; c >= 0 && comp[t + 1][c] > 0)
                        reach[t + 1][c] = 1;
    T.cut.assign((size_t)np * T.n * (r + 1), RowCutoffTable::kNoEntry);
    for (int t = 0; t < T.n; ++t)
        for (int pid = 0; pid < np; ++pid) {
            if (!reach[t][pid] || comp[t][pid] == 0) continue;
            BigInt cum = 0;
            T.cut[T.slot(pid, t, 0)] = 0;
            for (int row = 1; row <= r; ++row) {
                if (int c = T.child[pid][row - 1]; c >= 0) cum += comp[t + 1][c];
                BigInt cutv = ceil_shifted_ratio(cum, comp[t][pid], beta);
                T.cut[T.slot(pid, t, row)] = cutv.convert_to<uint64_t>();
            }
        }
    return T;
}

/// Total deterministic decode: register t picks the row whose cumulative
/// cutoff interval contains it.
inline StandardTableau decode_tableau(const BasisString& x, const RowCutoffTable& T) {
    if ((int)x.size() != T.n) throw std::invalid_argument("register count mismatch");
    StandardTableau out;
    out.row_of.resize(T.n);
    Profile empty;
    empty.overhang.assign(T.r - 1, 0);
    int pid = T.profile_id(empty);
    for (int t = 0; t < T.n; ++t) {
        int row = 0;
        for (int j = 1; j <= T.r; ++j)
            if (x[t] < T.cutoff(pid, t, j)) {
                row = j;
                break;
            }
        if (row == 0) throw std::logic_error("register value above the final cutoff");
        out.row_of[t] = row;
        pid = T.child[pid][row - 1];
    }
    return out;
}

namespace detail {

inline int jw_row_at(const RowCutoffTable& T, int pid, int t, uint32_t value) {
    for (int j = 1; j <= T.r; ++j)
        if (value < T.cutoff(pid, t, j)) return j;
    throw std::logic_error("register value above the final cutoff");
}

inline int jw_profile_before(const RowCutoffTable& T, const BasisString& x, int i) {
    Profile empty;
    empty.overhang.assign(T.r - 1, 0);
    int pid = T.profile_id(empty);
    for (int t = 0; t < i - 1; ++t) pid = T.child[pid][jw_row_at(T, pid, t, x[t]) - 1];
    return pid;
}

/// Axial distance between boxes placed in rows j1 then j2 from the diagram
/// with the given row lengths.
inline int jw_axial_distance(const std::array<int, 16>& b, int j1, int j2) {
    int col1 = b[j1] + 1;
    int col2 = b[j2] + (j2 == j1 ? 2 : 1);
    return (col1 - col2) - (j1 - j2);
}

/// Classifies the two-register segment of crossing position i for a string
/// whose sampler sits at profile pid before box i.
inline CrossingOutcome classify_jw_crossing(const RowCutoffTable& T, int i, int pid, uint32_t ri,
                                            uint32_t rj, int sign) {
    auto conj_if = [&](Complex z) { return sign < 0 ? std::conj(z) : z; };
    const int j1 = jw_row_at(T, pid, i - 1, ri);
    const int pid1 = T.child[pid][j1 - 1];
    const int j2 = jw_row_at(T, pid1, i, rj);
    auto lengths = T.row_lengths(pid, i - 1);
    const int d = jw_axial_distance(lengths, j1, j2);
    auto [diag, off] = jw_coefficients(d, T.k);
    CrossingOutcome out;
    if (off == Complex(0, 0)) {  // swapped configuration inadmissible or uncoupled
        out.diag = conj_if(diag);
        return out;
    }
    const int pid_swap = T.child[pid][j2 - 1];
    if (pid_swap < 0 || T.child[pid_swap][j1 - 1] < 0)
        throw std::logic_error("coupled swap is not an admissible pair of moves");
    const uint64_t w1a = T.interval_width(pid, i - 1, j1);
    const uint64_t w2a = T.interval_width(pid1, i, j2);
    const uint64_t w1b = T.interval_width(pid, i - 1, j2);
    const uint64_t w2b = T.interval_width(pid_swap, i, j1);
    const uint64_t size_a = w1a * w2a, size_b = w1b * w2b;
    const uint64_t rank = (ri - T.cutoff(pid, i - 1, j1 - 1)) * w2a +
                          (rj - T.cutoff(pid1, i, j2 - 1));
    if (rank >= std::min(size_a, size_b)) {
        out.kind = SegmentKind::stuck;
        out.diag = Complex(1, 0);
        return out;
    }
    out.kind = SegmentKind::rotation;
    out.diag = conj_if(diag);
    out.off = conj_if(off);
    out.partner_ri = (uint32_t)(T.cutoff(pid, i - 1, j2 - 1) + rank / w2b);
    out.partner_rj = (uint32_t)(T.cutoff(pid_swap, i, j1 - 1) + rank % w2b);
    return out;
}

}  // namespace detail

/// Applies the encoded crossing of strands i, i+1 (inverse for sign = -1).
/// Stuck strings are left fixed and flagged.
inline SparseAmplitudeState apply_encoded_crossing_jw(const SparseAmplitudeState& state, int i,
                                                      int sign, const RowCutoffTable& T) {
    if (i < 1 || i > T.n - 1) throw std::invalid_argument("crossing position out of range");
    SparseAmplitudeState out;
    out.touched_stuck = state.touched_stuck;
    out.terms.reserve(state.terms.size() * 2);
    for (const auto& [x, amp] : state.terms) {
        int pid = detail::jw_profile_before(T, x, i);
        auto action = detail::classify_jw_crossing(T, i, pid, x[i - 1], x[i], sign);
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
inline SparseAmplitudeState apply_encoded_braid_jw(const BraidWord& b, const RowCutoffTable& T,
                                                   BasisString x) {
    SparseAmplitudeState state = SparseAmplitudeState::basis_state(std::move(x));
    for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it)
        state = apply_encoded_crossing_jw(state, std::abs(*it), *it > 0 ? 1 : -1, T);
    return state;
}

/// Explicit canonical matching between register pairs of box-swapped
/// configurations at one crossing position and context profile, for audit.
/// The rotation applied by apply_encoded_crossing_jw pairs exactly these.
struct MatchingTable {
    using RegPair = std::pair<uint32_t, uint32_t>;
    struct ConfigPair {
        int row_first = 0, row_second = 0;  // configuration (row_first, row_second)
        std::vector<std::pair<RegPair, RegPair>> pairs;  // (j1,j2) string <-> (j2,j1) string
        std::vector<RegPair> stuck_first, stuck_second;
    };
    int position = 1;
    Profile context;
    std::vector<ConfigPair> entries;
};

inline MatchingTable build_matching(const RowCutoffTable& T, int i, const Profile& context) {
    if (i < 1 || i > T.n - 1) throw std::invalid_argument("crossing position out of range");
    MatchingTable M;
    M.position = i;
    M.context = context;
    const int pid = T.profile_id(context);
    if (!T.has(pid, i - 1)) return M;
    auto lengths = T.row_lengths(pid, i - 1);
    for (int j1 = 1; j1 <= T.r; ++j1) {
        for (int j2 = j1 + 1; j2 <= T.r; ++j2) {
            const int c1 = T.child[pid][j1 - 1], c2 = T.child[pid][j2 - 1];
            if (c1 < 0 || c2 < 0) continue;
            // Skip uncoupled pairs: the rotation coefficient vanishes there.
            const int d = detail::jw_axial_distance(lengths, j1, j2);
            if (std::abs(d) == 1 || std::abs(d) == T.k - 1) continue;
            const uint64_t w1a = T.interval_width(pid, i - 1, j1);
            const uint64_t w2a = (w1a > 0) ? T.interval_width(c1, i, j2) : 0;
            const uint64_t w1b = T.interval_width(pid, i - 1, j2);
            const uint64_t w2b = (w1b > 0) ? T.interval_width(c2, i, j1) : 0;
            if (w1a * w2a == 0 && w1b * w2b == 0) continue;
            MatchingTable::ConfigPair entry;
            entry.row_first = j1;
            entry.row_second = j2;
            const uint64_t size_a = w1a * w2a, size_b = w1b * w2b;
            const uint64_t matched = std::min(size_a, size_b);
            auto reg_pair_a = [&](uint64_t rank) {
                return MatchingTable::RegPair{
                    (uint32_t)(T.cutoff(pid, i - 1, j1 - 1) + rank / w2a),
                    (uint32_t)(T.cutoff(c1, i, j2 - 1) + rank % w2a)};
            };
            auto reg_pair_b = [&](uint64_t rank) {
                return MatchingTable::RegPair{
                    (uint32_t)(T.cutoff(pid, i - 1, j2 - 1) + rank / w2b),
                    (uint32_t)(T.cutoff(c2, i, j1 - 1) + rank % w2b)};
            };
            for (uint64_t rank = 0; rank < matched; ++rank)
                entry.pairs.emplace_back(reg_pair_a(rank), reg_pair_b(rank));
            for (uint64_t rank = matched; rank < size_a; ++rank)
                entry.stuck_first.push_back(reg_pair_a(rank));
            for (uint64_t rank = matched; rank < size_b; ++rank)
                entry.stuck_second.push_back(reg_pair_b(rank));
            M.entries.push_back(std::move(entry));
        }
    }
    return M;
}

/// Exact encoded normalized trace 2^{-n beta} sum_x <x|U(b)|x> over the
/// tableau encoding of one shape. Guarded to n*beta <= 24 bits.
inline Complex encoded_normalized_trace_jw(const BraidWord& b, const YoungDiagram& shape, int k,
                                           int r, int beta) {
    const int n = b.strands;
    if (shape.boxes() != n) throw std::invalid_argument("shape size must match strand count");
    if (n * beta > kMaxExactBits)
        throw std::invalid_argument("exact mode limited to n*beta <= 24 bits");
    RowCutoffTable T = build_row_cutoffs(shape, k, r, beta);
    const uint64_t total = 1ull << (n * beta);
    const uint32_t mask = (1u << beta) - 1;
    Complex sum = 0;
    BasisString x(n);
    for (uint64_t packed = 0; packed < total; ++packed) {
        for (int t = 0; t < n; ++t) x[t] = (uint32_t)(packed >> ((n - 1 - t) * beta)) & mask;
        sum += apply_encoded_braid_jw(b, T, x).amplitude(x);
    }
    return sum / (double)total;
}

}  // namespace braidtrace
