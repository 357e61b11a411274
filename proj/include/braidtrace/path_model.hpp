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
 * The path-model representation of B_n on ladder paths, its Markov trace,
 * and the Jones value of a trace closure at t = e^{i 2 pi / k}.
 *
 * Paths live on a ladder of k-1 rungs, start at rung 1, and take n unit
 * steps; the sector h collects the paths ending on rung h. Elementary
 * crossings act on two adjacent steps, mixing up-down and down-up segments
 * that share their starting rung.
 */

#pragma once

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "braidtrace/braid.hpp"
#include "braidtrace/numeric.hpp"

namespace braidtrace {

using Matrix = Eigen::MatrixXcd;

/// A ladder path: n steps over rungs 1..k-1, starting at rung 1.
/// Step value 0 is up, 1 is down.
struct LadderPath {
    int k = 3;
    std::vector<uint8_t> steps;

    std::vector<int> rungs() const {
        std::vector<int> r(steps.size() + 1);
        r[0] = 1;
        for (size_t t = 0; t < steps.size(); ++t) r[t + 1] = r[t] + (steps[t] == 0 ? 1 : -1);
        return r;
    }

    int final_rung() const {
        int a = 1;
        for (uint8_t s : steps) a += (s == 0 ? 1 : -1);
        return a;
    }

    bool operator==(const LadderPath& o) const { return k == o.k && steps == o.steps; }
};

namespace detail {
inline void check_rung(int k, int a) {
    if (a < 1 || a > k - 1) throw std::invalid_argument("rung out of range");
}
inline void check_params(int n, int k, int h) {
    if (n < 0) throw std::invalid_argument("step count must be nonnegative");
    if (k < 3) throw std::invalid_argument("k must be at least 3");
    check_rung(k, h);
}
}  // namespace detail

/// Number of s-step walks from rung a to rung b on the (k-1)-node line graph,
/// i.e. the (a,b) entry of the s-th power of its adjacency matrix. Exact.
inline BigInt path_count(int k, int s, int a, int b) {
    if (k < 3) throw std::invalid_argument("k must be at least 3");
    detail::check_rung(k, a);
    detail::check_rung(k, b);
    if (s < 0) throw std::invalid_argument("step count must be nonnegative");
    std::vector<BigInt> v(k + 1), w(k + 1);
    v[a] = 1;
    for (int step = 0; step < s; ++step) {
        for (int r = 1; r <= k - 1; ++r) w[r] = 0;
        for (int r = 1; r <= k - 1; ++r) {
            if (v[r] == 0) continue;
            if (r + 1 <= k - 1) w[r + 1] += v[r];
            if (r - 1 >= 1) w[r - 1] += v[r];
        }
        std::swap(v, w);
    }
    return v[b];
}

/// All n-step paths ending on rung h, in lexicographic step order (up < down).
inline std::vector<LadderPath> enumerate_paths(int n, int k, int h) {
    detail::check_params(n, k, h);
    std::vector<LadderPath> out;
    std::vector<uint8_t> steps;
    auto rec = [&](auto&& self, int rung) -> void {
        if ((int)steps.size() == n) {
            if (rung == h) out.push_back(LadderPath{k, steps});
            return;
        }
        int remaining = n - (int)steps.size();
        if (std::abs(rung - h) > remaining) return;  // unreachable, prune
        if (rung + 1 <= k - 1) {
            steps.push_back(0);
            self(self, rung + 1);
            steps.pop_back();
        }
        if (rung - 1 >= 1) {
            steps.push_back(1);
            self(self, rung - 1);
            steps.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

/// Crossing coefficients at rung l. A is the bracket phase i e^{-i pi/2k};
/// a/b/c/d act on the mixed two-step segments starting at rung l, e/f are
/// the uniform-segment phases (both A^{-1}). b == d always.
struct CrossingCoefficients {
    Complex A;
    double lambda = 0.0;  // sin(pi l / k)
    Complex a, b, c, d, e, f;
};

inline CrossingCoefficients crossing_coefficients(int l, int k) {
    detail::check_rung(k, l);
    const double pi = std::numbers::pi;
    CrossingCoefficients cc;
    cc.A = Complex(0, 1) * unit_phase(-pi / (2 * k));
    const Complex Ainv = 1.0 / cc.A;
    auto lam = [&](int m) { return std::sin(pi * m / k); };
    cc.lambda = lam(l);
    cc.e = cc.f = Ainv;
    cc.a = Ainv + cc.A * lam(l + 1) / lam(l);
    cc.c = Ainv + cc.A * lam(l - 1) / lam(l);
    // lam(l+1) or lam(l-1) vanishes exactly at the ladder boundary, making the
    // mixed block one-dimensional there.
    double rad = lam(l + 1) * lam(l - 1);
    cc.b = cc.d = (l - 1 >= 1 && l + 1 <= k - 1) ? cc.A * std::sqrt(std::max(rad, 0.0)) / lam(l)
                                                 : Complex(0, 0);
    return cc;
}

/// Matrix of the elementary crossing of strands i, i+1 (or its inverse for
/// sign = -1) on the sector of n-step paths ending at rung h, in the
/// enumerate_paths basis. Columns hold images of basis paths.
inline Matrix rep_generator(int n, int k, int h, int i, int sign) {
    detail::check_params(n, k, h);
    if (i < 1 || i > n - 1) throw std::invalid_argument("generator index out of range");
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +/-1");
    auto paths = enumerate_paths(n, k, h);
    std::map<std::vector<uint8_t>, int> index;
    for (size_t j = 0; j < paths.size(); ++j) index[paths[j].steps] = (int)j;
    const int dim = (int)paths.size();
    Matrix M = Matrix::Zero(dim, dim);
    for (int col = 0; col < dim; ++col) {
        const auto& p = paths[col];
        auto r = p.rungs();
        int l = r[i - 1];
        auto cc = crossing_coefficients(l, k);
        uint8_t s1 = p.steps[i - 1], s2 = p.steps[i];
        if (s1 == s2) {
            M(col, col) += cc.e;  // uniform segment, pure phase
        } else if (s1 == 0) {     // up-down at rung l
            M(col, col) += cc.a;
            if (cc.b != Complex(0, 0)) {
                auto q = p.steps;
                q[i - 1] = 1;
                q[i] = 0;
                M(index.at(q), col) += cc.b;
            }
        } else {  // down-up at rung l
            M(col, col) += cc.c;
            if (cc.d != Complex(0, 0)) {
                auto q = p.steps;
                q[i - 1] = 0;
                q[i] = 1;
                M(index.at(q), col) += cc.d;
            }
        }
    }
    if (sign < 0) return M.adjoint();
    return M;
}

/// Matrix of a whole braid word on the sector ending at rung h.
inline Matrix rep_word(const BraidWord& b, int k, int h) {
    auto paths = enumerate_paths(b.strands, k, h);
    const int dim = (int)paths.size();
    Matrix M = Matrix::Identity(dim, dim);
    for (int g : b.letters) M = M * rep_generator(b.strands, k, h, std::abs(g), g > 0 ? 1 : -1);
    return M;
}

/// The Markov trace: sector traces weighted by sin(pi h / k), normalized so
/// the identity braid gives 1. Magnitude is at most 1.
inline Complex markov_trace_path(const BraidWord& b, int k) {
    if (k < 3) throw std::invalid_argument("k must be at least 3");
    const double pi = std::numbers::pi;
    Complex num = 0;
    double den = 0;
    for (int h = 1; h <= k - 1; ++h) {
        auto paths = enumerate_paths(b.strands, k, h);
        if (paths.empty()) continue;
        double weight = std::sin(pi * h / k);
        den += weight * (double)paths.size();
        num += weight * rep_word(b, k, h).trace();
    }
    return num / den;
}

/// (-i e^{i pi/2k})^{3w} (-2 cos(pi/k))^{n-1} with w the closure writhe.
inline Complex jones_prefactor(const BraidWord& b, int k) {
    const double pi = std::numbers::pi;
    int w = closure_writhe(b);
    // -i e^{i pi/2k} = e^{i (pi/2k - pi/2)}
    Complex phase = unit_phase((pi / (2 * k) - pi / 2) * 3.0 * w);
    double base = -2.0 * std::cos(pi / k);
    Complex scale = 1;
    for (int j = 0; j < b.strands - 1; ++j) scale *= base;
    return phase * scale;
}

/// Jones value of the trace closure at t = e^{i 2 pi / k}.
inline Complex jones_value(const BraidWord& b, int k) {
    return jones_prefactor(b, k) * markov_trace_path(b, k);
}

}  // namespace braidtrace
