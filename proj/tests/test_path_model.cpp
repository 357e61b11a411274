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

#include <catch2/catch_amalgamated.hpp>

#include <numbers>
#include <random>

#include "braidtrace/oracle.hpp"
#include "braidtrace/path_model.hpp"

using namespace braidtrace;
using Catch::Approx;

namespace {

// Independent walk oracle: enumerate every step sequence of length s from a
// and count the ones that stay on the ladder and end at b.
long brute_force_walks(int k, int s, int a, int b) {
    long count = 0;
    for (long mask = 0; mask < (1L << s); ++mask) {
        int rung = a;
        bool ok = true;
        for (int t = 0; t < s; ++t) {
            rung += ((mask >> t) & 1) ? -1 : 1;
            if (rung < 1 || rung > k - 1) {
                ok = false;
                break;
            }
        }
        if (ok && rung == b) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("path_count agrees with brute-force enumeration") {
    REQUIRE(path_count(4, 0, 1, 1) == 1);
    REQUIRE(path_count(4, 4, 1, 3) == 2);
    REQUIRE(path_count(5, 2, 2, 2) == 2);
    for (int k = 3; k <= 6; ++k)
        for (int s = 0; s <= 10; ++s)
            for (int a = 1; a <= k - 1; ++a)
                for (int b = 1; b <= k - 1; ++b)
                    REQUIRE(path_count(k, s, a, b) == brute_force_walks(k, s, a, b));
    REQUIRE_THROWS_AS(path_count(4, 2, 0, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(path_count(4, 2, 1, 4), std::invalid_argument);
}

TEST_CASE("path_count exceeds 64-bit range without overflow") {
    // Walks on a 9-rung ladder grow roughly like (2 cos(pi/10))^s.
    BigInt big = path_count(10, 250, 1, 1);
    REQUIRE(big > BigInt(std::numeric_limits<uint64_t>::max()));
    // Consistency: one extra step splits into neighbors.
    REQUIRE(path_count(10, 251, 1, 2) ==
            path_count(10, 250, 1, 1) + path_count(10, 250, 1, 3));
}

TEST_CASE("enumerate_paths basics") {
    int total = 0;
    for (int h = 1; h <= 3; ++h) total += (int)enumerate_paths(4, 4, h).size();
    REQUIRE(total == 4);

    REQUIRE(enumerate_paths(4, 4, 2).empty());  // parity: even length ends on odd rungs

    int total35 = 0;
    for (int h = 1; h <= 4; ++h) total35 += (int)enumerate_paths(3, 5, h).size();
    REQUIRE(total35 == 3);

    // Sector sizes match path_count, and ordering is lexicographic (up < down).
    for (int n : {3, 4, 5})
        for (int k : {4, 5, 6})
            for (int h = 1; h <= k - 1; ++h) {
                auto paths = enumerate_paths(n, k, h);
                REQUIRE(BigInt((long)paths.size()) == path_count(k, n, 1, h));
                for (size_t j = 0; j + 1 < paths.size(); ++j)
                    REQUIRE(paths[j].steps < paths[j + 1].steps);
                for (const auto& p : paths) {
                    REQUIRE(p.final_rung() == h);
                    for (int rung : p.rungs()) {
                        REQUIRE(rung >= 1);
                        REQUIRE(rung <= k - 1);
                    }
                }
            }
}

TEST_CASE("crossing coefficients") {
    const double pi = std::numbers::pi;
    for (int k = 3; k <= 12; ++k)
        for (int l = 1; l <= k - 1; ++l) {
            auto cc = crossing_coefficients(l, k);
            Complex expected_e = -Complex(0, 1) * unit_phase(pi / (2 * k));
            REQUIRE(std::abs(cc.e - expected_e) < 1e-12);
            REQUIRE(std::abs(cc.f - expected_e) < 1e-12);
            REQUIRE(cc.b == cc.d);
            // Closed form of the diagonal coefficient.
            Complex closed = Complex(0, 1) * unit_phase(-pi * (2 * l + 1) / (2 * k)) *
                             std::sin(pi / k) / std::sin(pi * l / k);
            REQUIRE(std::abs(cc.a - closed) < 1e-12);
        }

    // The mixed 2x2 block is unitary away from the ladder boundary.
    for (int k = 4; k <= 12; ++k)
        for (int l = 2; l <= k - 2; ++l) {
            auto cc = crossing_coefficients(l, k);
            Eigen::Matrix2cd B;
            B << cc.a, cc.d, cc.b, cc.c;
            REQUIRE((B * B.adjoint() - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() <
                    1e-12);
        }

    auto cc52 = crossing_coefficients(2, 5);
    Eigen::Matrix2cd B;
    B << cc52.a, cc52.d, cc52.b, cc52.c;
    REQUIRE((B * B.adjoint() - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-12);

    REQUIRE_THROWS_AS(crossing_coefficients(0, 5), std::invalid_argument);
    REQUIRE_THROWS_AS(crossing_coefficients(5, 5), std::invalid_argument);
}

TEST_CASE("rep_generator unitarity and diagonal phases") {
    for (int k : {4, 5, 6, 7, 8})
        for (int n : {3, 4, 5})
            for (int h = 1; h <= k - 1; ++h) {
                auto paths = enumerate_paths(n, k, h);
                if (paths.empty()) continue;
                for (int i = 1; i <= n - 1; ++i) {
                    Matrix U = rep_generator(n, k, h, i, 1);
                    REQUIRE((U * U.adjoint() - Matrix::Identity(U.rows(), U.cols()))
                                .cwiseAbs()
                                .maxCoeff() < 1e-10);
                    // Inverse generator is exactly the adjoint.
                    Matrix V = rep_generator(n, k, h, i, -1);
                    REQUIRE((V - U.adjoint()).cwiseAbs().maxCoeff() == 0.0);
                }
            }

    // An up-up segment picks up the uniform phase.
    auto paths = enumerate_paths(3, 5, 4);  // single path: up up up
    REQUIRE(paths.size() == 1);
    Matrix U = rep_generator(3, 5, 4, 1, 1);
    auto cc = crossing_coefficients(1, 5);
    REQUIRE(std::abs(U(0, 0) - cc.e) < 1e-12);

    // The identity braid maps to the identity matrix on every sector.
    for (int h : {1, 3}) {
        Matrix I = rep_word(BraidWord(4, {}), 5, h);
        REQUIRE((I - Matrix::Identity(I.rows(), I.cols())).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("braid relations hold sector by sector") {
    for (int k = 3; k <= 8; ++k)
        for (int n : {3, 4, 5})
            for (int h = 1; h <= k - 1; ++h) {
                if (enumerate_paths(n, k, h).empty()) continue;
                for (int i = 1; i + 1 <= n - 1; ++i) {
                    Matrix a = rep_generator(n, k, h, i, 1);
                    Matrix b = rep_generator(n, k, h, i + 1, 1);
                    REQUIRE((a * b * a - b * a * b).cwiseAbs().maxCoeff() < 1e-9);
                }
                for (int i = 1; i <= n - 1; ++i)
                    for (int j = i + 2; j <= n - 1; ++j) {
                        Matrix a = rep_generator(n, k, h, i, 1);
                        Matrix b = rep_generator(n, k, h, j, 1);
                        REQUIRE((a * b - b * a).cwiseAbs().maxCoeff() < 1e-9);
                    }
            }
}

TEST_CASE("markov trace normalization and bounds") {
    for (int k : {3, 5, 7})
        for (int n : {1, 2, 3, 4}) {
            Complex t = markov_trace_path(BraidWord(n, {}), k);
            REQUIRE(std::abs(t - Complex(1, 0)) < 1e-12);
        }

    REQUIRE(std::abs(markov_trace_path(BraidWord(2, {1}), 5)) <= 1.0 + 1e-9);

    // Trace property: tr(ab) = tr(ba).
    std::mt19937 rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        auto rand_word = [&](int len) {
            std::vector<int> w;
            for (int j = 0; j < len; ++j) {
                int g = 1 + (int)(rng() % 2);
                w.push_back(rng() % 2 ? g : -g);
            }
            return w;
        };
        auto wa = rand_word(1 + rng() % 4), wb = rand_word(1 + rng() % 4);
        std::vector<int> ab = wa, ba = wb;
        ab.insert(ab.end(), wb.begin(), wb.end());
        ba.insert(ba.end(), wa.begin(), wa.end());
        Complex tab = markov_trace_path(BraidWord(3, ab), 5);
        Complex tba = markov_trace_path(BraidWord(3, ba), 5);
        REQUIRE(std::abs(tab - tba) < 1e-10);
        REQUIRE(std::abs(tab) <= 1.0 + 1e-9);
    }
}

TEST_CASE("jones_value matches the bracket oracle on small knots") {
    // Unknot as the identity braid on one strand.
    for (int k = 3; k <= 8; ++k)
        REQUIRE(std::abs(jones_value(BraidWord(1, {}), k) - Complex(1, 0)) < 1e-12);

    BraidWord trefoil(2, {1, 1, 1});
    REQUIRE(std::abs(jones_value(trefoil, 5) -
                     evaluate_at_root(kauffman_jones(trefoil), 5)) < 1e-9);

    BraidWord hopf(2, {1, 1});
    REQUIRE(std::abs(jones_value(hopf, 6) - evaluate_at_root(kauffman_jones(hopf), 6)) < 1e-9);

    BraidWord fig8(3, {1, -2, 1, -2});
    for (int k = 3; k <= 8; ++k)
        REQUIRE(std::abs(jones_value(fig8, k) - evaluate_at_root(kauffman_jones(fig8), k)) <
                1e-9);
}

TEST_CASE("jones_value is invariant under Markov moves") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + (int)(rng() % 2);
        std::vector<int> w;
        int len = (int)(rng() % 5);
        for (int j = 0; j < len; ++j) {
            int g = 1 + (int)(rng() % (n - 1));
            w.push_back(rng() % 2 ? g : -g);
        }
        BraidWord b(n, w);
        int k = 4 + (int)(rng() % 4);
        Complex base = jones_value(b, k);

        std::vector<int> conj = {(int)(1 + rng() % (n - 1))};
        Complex vc = jones_value(markov_conjugate(b, BraidWord(n, conj)), k);
        REQUIRE(std::abs(vc - base) < 1e-9);

        Complex vs = jones_value(markov_stabilize(b, 1), k);
        REQUIRE(std::abs(vs - base) < 1e-9);
        Complex vn = jones_value(markov_stabilize(b, -1), k);
        REQUIRE(std::abs(vn - base) < 1e-9);
    }
}
