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
 * Exact Jones polynomials of trace closures via the Kauffman bracket in the
 * Temperley-Lieb diagram algebra. Exponential-time state sum over planar
 * pairings, exact integer coefficients; intended as desk-scale ground truth,
 * deliberately independent of the representation-theoretic route.
 */

#pragma once

#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidtrace/braid.hpp"
#include "braidtrace/numeric.hpp"

namespace braidtrace {

/// Laurent polynomial with exact integer coefficients in the bracket
/// variable (the Jones variable is t = bracket^{-4}).
class LaurentPolynomial {
  public:
    LaurentPolynomial() = default;
    static LaurentPolynomial one() {
        LaurentPolynomial p;
        p.coeff_[0] = 1;
        return p;
    }
    static LaurentPolynomial monomial(int exp, BigInt c) {
        LaurentPolynomial p;
        if (c != 0) p.coeff_[exp] = std::move(c);
        return p;
    }

    const std::map<int, BigInt>& coefficients() const { return coeff_; }
    bool is_zero() const { return coeff_.empty(); }

    void add_term(int exp, const BigInt& c) {
        auto it = coeff_.find(exp);
        if (it == coeff_.end()) {
            if (c != 0) coeff_[exp] = c;
        } else {
            it->second += c;
            if (it->second == 0) coeff_.erase(it);
        }
    }

    LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
        for (const auto& [e, c] : o.coeff_) add_term(e, c);
        return *this;
    }

    LaurentPolynomial operator*(const LaurentPolynomial& o) const {
        LaurentPolynomial r;
        for (const auto& [e1, c1] : coeff_)
            for (const auto& [e2, c2] : o.coeff_) r.add_term(e1 + e2, c1 * c2);
        return r;
    }

    /// Multiplication by sign * bracket^shift.
    LaurentPolynomial shifted(int shift, int sign = 1) const {
        LaurentPolynomial r;
        for (const auto& [e, c] : coeff_) r.coeff_[e + shift] = sign < 0 ? -c : c;
        return r;
    }

    /// Swap bracket -> bracket^{-1} (mirror image of the link).
    LaurentPolynomial mirrored() const {
        LaurentPolynomial r;
        for (const auto& [e, c] : coeff_) r.coeff_[-e] = c;
        return r;
    }

    Complex evaluate(Complex x) const {
        Complex out = 0;
        for (const auto& [e, c] : coeff_) {
            Complex p = 1;
            Complex base = e >= 0 ? x : 1.0 / x;
            for (int j = 0; j < std::abs(e); ++j) p *= base;
            out += to_double(c) * p;
        }
        return out;
    }

    bool operator==(const LaurentPolynomial& o) const { return coeff_ == o.coeff_; }

  private:
    std::map<int, BigInt> coeff_;
};

/// Evaluate a Jones polynomial in the bracket variable at t = e^{i 2 pi / k},
/// i.e. at bracket = e^{-i pi / 2k}.
inline Complex evaluate_at_root(const LaurentPolynomial& p, int k) {
    return p.evaluate(unit_phase(-std::numbers::pi / (2 * k)));
}

/// Non-crossing perfect matching of 2n boundary points of a Temperley-Lieb
/// diagram: points 0..n-1 on top, n..2n-1 on the bottom.
struct PlanarPairing {
    std::vector<int> mate;

    int points() const { return (int)mate.size(); }
    bool operator<(const PlanarPairing& o) const { return mate < o.mate; }
    bool operator==(const PlanarPairing& o) const { return mate == o.mate; }

    static PlanarPairing identity(int n) {
        PlanarPairing d;
        d.mate.resize(2 * n);
        for (int j = 0; j < n; ++j) {
            d.mate[j] = n + j;
            d.mate[n + j] = j;
        }
        return d;
    }

    /// The cap-cup diagram joining top points i-1,i and bottom points i-1,i
    /// (1-based strand position i).
    static PlanarPairing cap_cup(int n, int i) {
        PlanarPairing d = identity(n);
        d.mate[i - 1] = i;
        d.mate[i] = i - 1;
        d.mate[n + i - 1] = n + i;
        d.mate[n + i] = n + i - 1;
        return d;
    }
};

inline bool node_is_middle(int node, int n) { return node >= n && node < 2 * n; }

/// Stacks a over b (a's bottom glued to b's top). Returns the composed
/// pairing and the number of closed loops created.
inline std::pair<PlanarPairing, int> tl_multiply(const PlanarPairing& a, const PlanarPairing& b) {
    const int n = a.points() / 2;
    if (b.points() != 2 * n) throw std::invalid_argument("diagram size mismatch");
    // Node ids: 0..n-1 top boundary, n..2n-1 middle, 2n..3n-1 bottom boundary.
    // a connects {top, middle}; b connects {middle, bottom}.
    auto a_node = [&](int p) { return p; };                            // 0..2n-1
    auto b_node = [&](int p) { return p + n; };                        // n..3n-1
    std::vector<std::array<int, 2>> adj(3 * n, {-1, -1});
    auto link = [&](int x, int y) {
        adj[x][adj[x][0] < 0 ? 0 : 1] = y;
        adj[y][adj[y][0] < 0 ? 0 : 1] = x;
    };
    for (int p = 0; p < 2 * n; ++p)
        if (p < a.mate[p]) link(a_node(p), a_node(a.mate[p]));
    for (int p = 0; p < 2 * n; ++p)
        if (p < b.mate[p]) link(b_node(p), b_node(b.mate[p]));

    PlanarPairing out;
    out.mate.assign(2 * n, -1);
    std::vector<bool> seen(3 * n, false);
    auto boundary_index = [&](int node) {
        // top nodes keep their index; bottom nodes map to n..2n-1
        return node < n ? node : node - n;
    };
    for (int start = 0; start < 3 * n; ++start) {
        if (node_is_middle(start, n) || seen[start]) continue;
        seen[start] = true;
        int prev = -1, cur = start;
        for (;;) {
            int nxt = (adj[cur][0] != prev && adj[cur][0] >= 0) ? adj[cur][0] : adj[cur][1];
            seen[nxt] = true;
            if (!node_is_middle(nxt, n)) {
                int u = boundary_index(start), v = boundary_index(nxt);
                out.mate[u] = v;
                out.mate[v] = u;
                break;
            }
            prev = cur;
            cur = nxt;
        }
    }
    int loops = 0;
    for (int start = n; start < 2 * n; ++start) {
        if (seen[start]) continue;
        ++loops;
        int prev = -1, cur = start;
        for (;;) {
            int nxt = (adj[cur][0] != prev) ? adj[cur][0] : adj[cur][1];
            seen[nxt] = true;
            if (nxt == start) break;
            prev = cur;
            cur = nxt;
        }
    }
    return {out, loops};
}

/// Number of loops formed by joining each top point to the bottom point below it.
inline int closure_loops(const PlanarPairing& d) {
    const int n = d.points() / 2;
    std::vector<bool> seen(2 * n, false);
    int loops = 0;
    for (int s = 0; s < 2 * n; ++s) {
        if (seen[s]) continue;
        ++loops;
        int cur = s;
        while (!seen[cur]) {
            seen[cur] = true;
            cur = d.mate[cur];
            seen[cur] = true;
            cur = cur < n ? cur + n : cur - n;  // closure arc
        }
    }
    return loops;
}

/// Jones polynomial (bracket variable) of the trace closure of b, by the
/// Kauffman state sum. A positive letter smooths as bracket^{-1} * identity
/// + bracket * cap_cup, matching the chirality convention used by
/// jones_value; the loop weight is -bracket^2 - bracket^{-2} and the result
/// carries the (-bracket)^{-3w} normalization, w = closure_writhe(b).
inline LaurentPolynomial kauffman_jones(const BraidWord& b) {
    const int n = b.strands;
    if (n > 8) throw std::invalid_argument("oracle limited to at most 8 strands");
    if ((int)b.letters.size() > 14)
        throw std::invalid_argument("oracle limited to at most 14 crossings");
    LaurentPolynomial delta;
    delta.add_term(2, -1);
    delta.add_term(-2, -1);
    std::map<PlanarPairing, LaurentPolynomial> state;
    state[PlanarPairing::identity(n)] = LaurentPolynomial::one();
    for (int g : b.letters) {
        const int i = std::abs(g);
        const int e_id = g > 0 ? -1 : 1;  // exponent on the identity smoothing
        std::map<PlanarPairing, LaurentPolynomial> next;
        for (const auto& [diag, poly] : state) {
            next[diag] += poly.shifted(e_id);
            auto [de, loops] = tl_multiply(diag, PlanarPairing::cap_cup(n, i));
            LaurentPolynomial term = poly.shifted(-e_id);
            for (int j = 0; j < loops; ++j) term = term * delta;
            next[de] += term;
        }
        state.clear();
        for (auto& [diag, poly] : next)
            if (!poly.is_zero()) state.emplace(diag, std::move(poly));
    }
    LaurentPolynomial bracket;
    for (const auto& [diag, poly] : state) {
        int loops = closure_loops(diag);
        LaurentPolynomial term = poly;
        for (int j = 0; j < loops - 1; ++j) term = term * delta;
        bracket += term;
    }
    const int w = closure_writhe(b);
    return bracket.shifted(-3 * w, (w % 2) ? -1 : 1);
}

}  // namespace braidtrace
