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
 * The Jones-Wenzl representation of B_n on standard Young tableaux with at
 * most r rows and bounded row-length spread, its Markov trace with hook
 * length weights, and the single-variable HOMFLY value of a trace closure
 * at q = e^{i 2 pi / k}.
 *
 * A tableau is stored as the sequence of row indices receiving boxes
 * 1..n; admissibility requires every prefix to be a valid diagram with
 * first-row minus r-th-row length at most k-r. Profiles (consecutive
 * row-length differences) are the walk states: tableaux are exactly the
 * admissible walks on the profile digraph.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "braidtrace/braid.hpp"
#include "braidtrace/numeric.hpp"

namespace braidtrace {

using Matrix = Eigen::MatrixXcd;

/// A partition: weakly decreasing positive row lengths.
struct YoungDiagram {
    std::vector<int> rows;

    int boxes() const {
        int s = 0;
        for (int r : rows) s += r;
        return s;
    }
    int row_length(int j) const {  // 1-based, 0 beyond the last row
        return (j >= 1 && j <= (int)rows.size()) ? rows[j - 1] : 0;
    }
    bool operator==(const YoungDiagram& o) const { return rows == o.rows; }
    bool operator<(const YoungDiagram& o) const { return rows < o.rows; }
};

/// A standard tableau as the row index (1-based) receiving box t.
struct StandardTableau {
    std::vector<int> row_of;

    int boxes() const { return (int)row_of.size(); }
    YoungDiagram shape() const {
        std::vector<int> rows;
        for (int j : row_of) {
            if (j > (int)rows.size()) rows.resize(j, 0);
            rows[j - 1]++;
        }
        return YoungDiagram{rows};
    }
    /// (row, column) of box t, 1-based.
    std::pair<int, int> position(int t) const {
        std::vector<int> len(16, 0);
        for (int s = 0; s < t; ++s) {
            int j = row_of[s];
            if (j > (int)len.size()) len.resize(j, 0);
            ++len[j - 1];
        }
        return {row_of[t - 1], len[row_of[t - 1] - 1]};
    }
    bool operator==(const StandardTableau& o) const { return row_of == o.row_of; }
};

/// Consecutive row-length differences (c_2..c_r); the walk state of a
/// growing tableau. Entries are nonnegative and sum to at most k-r.
struct Profile {
    std::vector<int> overhang;

    bool operator==(const Profile& o) const { return overhang == o.overhang; }
    bool operator<(const Profile& o) const { return overhang < o.overhang; }
};

namespace detail {
inline void check_kr(int k, int r) {
    if (r < 2) throw std::invalid_argument("r must be at least 2");
    if (r > 12) throw std::invalid_argument("r larger than 12 is not supported");
    if (k <= r) throw std::invalid_argument("k must exceed r");
}
}  // namespace detail

/// Profile of a diagram padded to r rows.
inline Profile profile_of(const YoungDiagram& d, int r) {
    if ((int)d.rows.size() > r) throw std::invalid_argument("diagram has more than r rows");
    Profile p;
    p.overhang.resize(r - 1);
    for (int j = 1; j <= r - 1; ++j) p.overhang[j - 1] = d.row_length(j) - d.row_length(j + 1);
    return p;
}

/// Profile of the first `boxes` boxes of a tableau.
inline Profile profile_of_prefix(const StandardTableau& t, int boxes, int r) {
    std::vector<int> rows;
    for (int s = 0; s < boxes; ++s) {
        int j = t.row_of[s];
        if (j > (int)rows.size()) rows.resize(j, 0);
        rows[j - 1]++;
    }
    return profile_of(YoungDiagram{rows}, r);
}

/// Profile after adding one box to the given row, or nullopt if that is not
/// an admissible move (rows must stay weakly decreasing and the total
/// overhang at most k-r).
inline std::optional<Profile> profile_add_box(const Profile& p, int row, int k, int r) {
    detail::check_kr(k, r);
    if (row < 1 || row > r) return std::nullopt;
    Profile q = p;
    if (row == 1) {
        q.overhang[0] += 1;
    } else {
        if (q.overhang[row - 2] == 0) return std::nullopt;  // would out-grow the row above
        q.overhang[row - 2] -= 1;
        if (row <= r - 1) q.overhang[row - 1] += 1;
    }
    int sum = 0;
    for (int c : q.overhang) sum += c;
    if (sum > k - r) return std::nullopt;
    return q;
}

/// All profiles with total overhang at most k-r, in lexicographic order.
inline std::vector<Profile> enumerate_profiles(int k, int r) {
    detail::check_kr(k, r);
    std::vector<Profile> out;
    Profile p;
    p.overhang.assign(r - 1, 0);
    auto rec = [&](auto&& self, int idx, int used) -> void {
        if (idx == r - 1) {
            out.push_back(p);
            return;
        }
        for (int v = 0; v + used <= k - r; ++v) {
            p.overhang[idx] = v;
            self(self, idx + 1, used + v);
        }
        p.overhang[idx] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

/// Number of admissible walks of the given length from profile p to the
/// profile of the target diagram, via iterated application of the profile
/// digraph adjacency matrix. Exact integers.
inline BigInt completion_count(const Profile& p, const YoungDiagram& target, int steps, int k,
                               int r) {
    detail::check_kr(k, r);
    if (steps < 0) throw std::invalid_argument("steps must be nonnegative");
    Profile goal = profile_of(target, r);
    std::map<Profile, BigInt> cur;
    cur[p] = 1;
    for (int s = 0; s < steps; ++s) {
        std::map<Profile, BigInt> next;
        for (const auto& [q, c] : cur)
            for (int row = 1; row <= r; ++row)
                if (auto q2 = profile_add_box(q, row, k, r)) next[*q2] += c;
        cur = std::move(next);
    }
    auto it = cur.find(goal);
    return it == cur.end() ? BigInt(0) : it->second;
}

/// All admissible diagrams of n boxes: at most r rows, first-row length
/// minus r-th-row length at most k-r. Descending lexicographic order.
inline std::vector<YoungDiagram> enumerate_diagrams(int n, int k, int r) {
    detail::check_kr(k, r);
    std::vector<YoungDiagram> out;
    std::vector<int> rows;
    auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
        if (remaining == 0) {
            YoungDiagram d{rows};
            if (d.row_length(1) - d.row_length(r) <= k - r) out.push_back(d);
            return;
        }
        if ((int)rows.size() == r) return;
        for (int part = std::min(remaining, maxpart); part >= 1; --part) {
            // Lower rows cannot push the first-row overhang below the bound.
            rows.push_back(part);
            self(self, remaining - part, part);
            rows.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// All standard tableaux of the given shape whose every prefix is
/// admissible, ordered lexicographically by row-assignment sequence.
inline std::vector<StandardTableau> enumerate_tableaux(const YoungDiagram& shape, int k, int r) {
    detail::check_kr(k, r);
    const int n = shape.boxes();
    std::vector<StandardTableau> out;
    std::vector<int> seq;
    std::vector<int> len(r, 0);
    auto rec = [&](auto&& self) -> void {
        if ((int)seq.size() == n) {
            out.push_back(StandardTableau{seq});
            return;
        }
        for (int j = 1; j <= r; ++j) {
            if (len[j - 1] >= shape.row_length(j)) continue;
            if (j > 1 && len[j - 1] + 1 > len[j - 2]) continue;  // keep rows weakly decreasing
            len[j - 1]++;
            if (len[0] - len[r - 1] <= k - r) {
                seq.push_back(j);
                self(self);
                seq.pop_back();
            }
            len[j - 1]--;
        }
    };
    rec(rec);
    return out;
}

/// Axial distance between boxes i and i+1: content difference
/// (col - row) of box i minus that of box i+1. Never zero for a standard
/// tableau.
inline int axial_distance(const StandardTableau& t, int i) {
    if (i < 1 || i + 1 > t.boxes()) throw std::invalid_argument("box index out of range");
    auto [ri, ci] = t.position(i);
    auto [rj, cj] = t.position(i + 1);
    return ci - cj - (ri - rj);
}

namespace detail {

/// Diagonal and off-diagonal coefficients of the crossing action at axial
/// distance d. The radicand vanishes identically when |d| is 1 or k-1; that
/// is detected on the integer so inadmissible swaps get an exact zero.
inline std::pair<Complex, Complex> jw_coefficients(int d, int k) {
    const double pi = std::numbers::pi;
    if (d == 0 || std::abs(d) > k - 1)
        throw std::logic_error("axial distance out of range for an admissible tableau");
    const double s1 = std::sin(pi / k);
    const double sd = std::sin(pi * d / k);
    Complex diag = -unit_phase(pi * (1 - d) / k) * s1 / sd;
    Complex off = 0;
    if (std::abs(d) != 1 && std::abs(d) != k - 1) {
        double rad = 1.0 - (s1 / sd) * (s1 / sd);
        off = -unit_phase(pi / k) * std::sqrt(std::max(rad, 0.0));
    }
    return {diag, off};
}

}  // namespace detail

/// Matrix of the elementary crossing of strands i, i+1 (inverse for
/// sign = -1) on the tableaux of the given shape, in enumerate_tableaux
/// order. Columns hold images.
inline Matrix jw_generator(const YoungDiagram& shape, int k, int r, int i, int sign) {
    detail::check_kr(k, r);
    const int n = shape.boxes();
    if (i < 1 || i > n - 1) throw std::invalid_argument("generator index out of range");
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +/-1");
    auto tabs = enumerate_tableaux(shape, k, r);
    std::map<std::vector<int>, int> index;
    for (size_t j = 0; j < tabs.size(); ++j) index[tabs[j].row_of] = (int)j;
    const int dim = (int)tabs.size();
    Matrix M = Matrix::Zero(dim, dim);
    for (int col = 0; col < dim; ++col) {
        const auto& t = tabs[col];
        int d = axial_distance(t, i);
        auto [diag, off] = detail::jw_coefficients(d, k);
        M(col, col) += diag;
        if (off != Complex(0, 0)) {
            auto swapped = t.row_of;
            std::swap(swapped[i - 1], swapped[i]);
            auto it = index.find(swapped);
            if (it == index.end())
                throw std::logic_error("nonzero coupling to an inadmissible tableau");
            M(it->second, col) += off;
        }
    }
    if (sign < 0) return M.adjoint();
    return M;
}

/// Markov trace weight of a diagram: hook-length product of sines with the
/// (sin(pi/k)/sin(pi r/k))^n prefactor. Angles that appear in both the
/// content and hook multisets are cancelled exactly before evaluating, which
/// resolves the 0/0 pairs arising at boundary diagrams.
inline double schur_weight(const YoungDiagram& shape, int k, int r) {
    detail::check_kr(k, r);
    const double pi = std::numbers::pi;
    const int n = shape.boxes();
    std::map<int, int> angles;  // exponent of sin(pi * m / k), numerator minus denominator
    int ncols = shape.row_length(1);
    std::vector<int> col_len(ncols + 1, 0);
    for (int c = 1; c <= ncols; ++c)
        for (int j = 1; j <= (int)shape.rows.size(); ++j)
            if (shape.row_length(j) >= c) col_len[c]++;
    for (int row = 1; row <= (int)shape.rows.size(); ++row)
        for (int col = 1; col <= shape.row_length(row); ++col) {
            angles[col - row + r] += 1;                                        // content + r
            angles[(shape.row_length(row) - col) + (col_len[col] - row) + 1] -= 1;  // hook
        }
    double value = std::pow(std::sin(pi / k) / std::sin(pi * r / k), n);
    for (const auto& [m, exp] : angles) {
        if (exp == 0) continue;
        if (m % k == 0) {
            if (exp > 0) return 0.0;
            throw std::logic_error("vanishing hook angle for an admissible diagram");
        }
        value *= std::pow(std::sin(pi * m / k), exp);
    }
    return value;
}

/// Matrix of a braid word on the tableaux of one shape.
inline Matrix jw_word(const BraidWord& b, const YoungDiagram& shape, int k, int r) {
    auto tabs = enumerate_tableaux(shape, k, r);
    const int dim = (int)tabs.size();
    Matrix M = Matrix::Identity(dim, dim);
    for (int g : b.letters) M = M * jw_generator(shape, k, r, std::abs(g), g > 0 ? 1 : -1);
    return M;
}

/// Weighted sum of sector traces; 1 on the identity braid.
inline Complex markov_trace_jw(const BraidWord& b, int k, int r) {
    detail::check_kr(k, r);
    Complex total = 0;
    for (const auto& shape : enumerate_diagrams(b.strands, k, r)) {
        auto tabs = enumerate_tableaux(shape, k, r);
        if (tabs.empty()) continue;
        double w = schur_weight(shape, k, r);
        if (w == 0.0) continue;
        total += w * jw_word(b, shape, k, r).trace();
    }
    return total;
}

/// (sin(pi r/k)/sin(pi/k))^{n-1} e^{-i (r+1) e(b) pi / k}.
inline Complex homfly_prefactor(const BraidWord& b, int k, int r) {
    detail::check_kr(k, r);
    const double pi = std::numbers::pi;
    double base = std::sin(pi * r / k) / std::sin(pi / k);
    double scale = 1;
    for (int j = 0; j < b.strands - 1; ++j) scale *= base;
    return scale * unit_phase(-(r + 1) * exponent_sum(b) * pi / k);
}

/// Single-variable HOMFLY value of the trace closure at q = e^{i 2 pi / k}.
inline Complex homfly_value(const BraidWord& b, int k, int r) {
    return homfly_prefactor(b, k, r) * markov_trace_jw(b, k, r);
}

}  // namespace braidtrace
