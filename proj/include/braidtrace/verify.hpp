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
 * Self-check suites: representation soundness, the exact-oracle grid, the
 * two-row correspondence, and Markov-move invariance. Used by the `verify`
 * command and the acceptance harness.
 */

#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "braidtrace/braid.hpp"
#include "braidtrace/dqc1.hpp"
#include "braidtrace/jones_wenzl.hpp"
#include "braidtrace/oracle.hpp"
#include "braidtrace/path_model.hpp"

namespace braidtrace {

struct SuiteReport {
    std::string name;
    long checks = 0;
    double max_deviation = 0;
    std::vector<std::string> violations;

    bool passed() const { return violations.empty(); }
    void observe(double dev) { max_deviation = std::max(max_deviation, dev); }
    void check(bool ok, double dev, const std::string& what) {
        ++checks;
        observe(dev);
        if (!ok && violations.size() < 64) violations.push_back(what);
        if (!ok && violations.size() == 64) violations.push_back("... (more suppressed)");
    }
};

/// Caches sector generator matrices so braid grids evaluate quickly.
class PathRepCache {
  public:
    Complex markov_trace(const BraidWord& b, int k) {
        const Sectors& sec = sectors(b.strands, k);
        Complex num = 0;
        for (const auto& s : sec.list) {
            Matrix M = Matrix::Identity(s.dim, s.dim);
            for (int g : b.letters) M = M * s.gen.at({std::abs(g), g > 0 ? 1 : -1});
            num += s.weight * M.trace();
        }
        return num / sec.total_weight;
    }
    Complex jones(const BraidWord& b, int k) { return jones_prefactor(b, k) * markov_trace(b, k); }

  private:
    struct Sector {
        int h, dim;
        double weight;
        std::map<std::pair<int, int>, Matrix> gen;
    };
    struct Sectors {
        std::vector<Sector> list;
        double total_weight = 0;
    };
    std::map<std::pair<int, int>, Sectors> store_;

    const Sectors& sectors(int n, int k) {
        auto key = std::make_pair(n, k);
        auto it = store_.find(key);
        if (it != store_.end()) return it->second;
        Sectors sec;
        for (int h = 1; h <= k - 1; ++h) {
            auto paths = enumerate_paths(n, k, h);
            if (paths.empty()) continue;
            Sector s;
            s.h = h;
            s.dim = (int)paths.size();
            s.weight = std::sin(std::numbers::pi * h / k);
            for (int i = 1; i <= n - 1; ++i)
                for (int sign : {1, -1}) s.gen[{i, sign}] = rep_generator(n, k, h, i, sign);
            sec.total_weight += s.weight * s.dim;
            sec.list.push_back(std::move(s));
        }
        return store_.emplace(key, std::move(sec)).first->second;
    }
};

/// Caches tableau-sector generators and weights per (n, k, r).
class JwRepCache {
  public:
    Complex markov_trace(const BraidWord& b, int k, int r) {
        Complex total = 0;
        for (const auto& s : sectors(b.strands, k, r).list) {
            Matrix M = Matrix::Identity(s.dim, s.dim);
            for (int g : b.letters) M = M * s.gen.at({std::abs(g), g > 0 ? 1 : -1});
            total += s.weight * M.trace();
        }
        return total;
    }
    Complex homfly(const BraidWord& b, int k, int r) {
        return homfly_prefactor(b, k, r) * markov_trace(b, k, r);
    }

  private:
    struct Sector {
        YoungDiagram shape;
        int dim;
        double weight;
        std::map<std::pair<int, int>, Matrix> gen;
    };
    struct Sectors {
        std::vector<Sector> list;
    };
    std::map<std::tuple<int, int, int>, Sectors> store_;

    const Sectors& sectors(int n, int k, int r) {
        auto key = std::make_tuple(n, k, r);
        auto it = store_.find(key);
        if (it != store_.end()) return it->second;
        Sectors sec;
        for (const auto& shape : enumerate_diagrams(n, k, r)) {
            auto tabs = enumerate_tableaux(shape, k, r);
            if (tabs.empty()) continue;
            Sector s;
            s.shape = shape;
            s.dim = (int)tabs.size();
            s.weight = schur_weight(shape, k, r);
            for (int i = 1; i <= n - 1; ++i)
                for (int sign : {1, -1}) s.gen[{i, sign}] = jw_generator(shape, k, r, i, sign);
            sec.list.push_back(std::move(s));
        }
        return store_.emplace(key, std::move(sec)).first->second;
    }
};

/// Visits every braid word of at most max_crossings letters on 1..max_strands
/// strands, in a fixed deterministic order.
template <class Fn>
void for_each_grid_braid(int max_strands, int max_crossings, Fn&& fn) {
    for (int n = 1; n <= max_strands; ++n) {
        std::vector<int> alphabet;
        for (int g = 1; g <= n - 1; ++g) {
            alphabet.push_back(g);
            alphabet.push_back(-g);
        }
        std::vector<int> word;
        auto rec = [&](auto&& self) -> void {
            fn(BraidWord(n, word));
            if ((int)word.size() == max_crossings) return;
            for (int g : alphabet) {
                word.push_back(g);
                self(self);
                word.pop_back();
            }
        };
        rec(rec);
    }
}

/// Unitarity and braid relations for both representations.
inline SuiteReport relations_suite(int max_strands, int max_k, int max_r, double tol_relation = 1e-9,
                                   double tol_unitary = 1e-10) {
    SuiteReport rep;
    rep.name = "relations";
    std::ostringstream msg;
    for (int n = 2; n <= max_strands; ++n) {
        for (int k = 3; k <= max_k; ++k) {
            for (int h = 1; h <= k - 1; ++h) {
                if (enumerate_paths(n, k, h).empty()) continue;
                std::vector<Matrix> gens;
                for (int i = 1; i <= n - 1; ++i) gens.push_back(rep_generator(n, k, h, i, 1));
                for (int i = 0; i < n - 1; ++i) {
                    double du = (gens[i] * gens[i].adjoint() -
                                 Matrix::Identity(gens[i].rows(), gens[i].cols()))
                                    .cwiseAbs()
                                    .maxCoeff();
                    rep.check(du < tol_unitary, du,
                              "ladder unitarity n=" + std::to_string(n) + " k=" +
                                  std::to_string(k) + " h=" + std::to_string(h));
                    if (i + 1 < n - 1) {
                        double dr = (gens[i] * gens[i + 1] * gens[i] -
                                     gens[i + 1] * gens[i] * gens[i + 1])
                                        .cwiseAbs()
                                        .maxCoeff();
                        rep.check(dr < tol_relation, dr, "ladder braid relation");
                    }
                    for (int j = i + 2; j < n - 1; ++j) {
                        double dc = (gens[i] * gens[j] - gens[j] * gens[i]).cwiseAbs().maxCoeff();
                        rep.check(dc < tol_relation, dc, "ladder distant commutation");
                    }
                }
            }
            for (int r = 2; r <= std::min(max_r, k - 1); ++r) {
                for (const auto& shape : enumerate_diagrams(n, k, r)) {
                    if (enumerate_tableaux(shape, k, r).empty()) continue;
                    std::vector<Matrix> gens;
                    for (int i = 1; i <= n - 1; ++i)
                        gens.push_back(jw_generator(shape, k, r, i, 1));
                    for (int i = 0; i < n - 1; ++i) {
                        double du = (gens[i] * gens[i].adjoint() -
                                     Matrix::Identity(gens[i].rows(), gens[i].cols()))
                                        .cwiseAbs()
                                        .maxCoeff();
                        rep.check(du < tol_unitary, du, "tableau unitarity");
                        if (i + 1 < n - 1) {
                            double dr = (gens[i] * gens[i + 1] * gens[i] -
                                         gens[i + 1] * gens[i] * gens[i + 1])
                                            .cwiseAbs()
                                            .maxCoeff();
                            rep.check(dr < tol_relation, dr, "tableau braid relation");
                        }
                        for (int j = i + 2; j < n - 1; ++j) {
                            double dc =
                                (gens[i] * gens[j] - gens[j] * gens[i]).cwiseAbs().maxCoeff();
                            rep.check(dc < tol_relation, dc, "tableau distant commutation");
                        }
                    }
                }
            }
        }
    }
    return rep;
}

/// Exhaustive grid agreement between the representation route and the exact
/// bracket polynomial.
inline SuiteReport oracle_agreement_suite(int max_strands, int max_crossings, int k_min, int k_max,
                                          double tol = 1e-9) {
    SuiteReport rep;
    rep.name = "oracle";
    PathRepCache cache;
    for_each_grid_braid(max_strands, max_crossings, [&](const BraidWord& b) {
        auto poly = kauffman_jones(b);
        for (int k = k_min; k <= k_max; ++k) {
            double dev = std::abs(cache.jones(b, k) - evaluate_at_root(poly, k));
            rep.check(dev < tol, dev,
                      "jones mismatch on '" + to_string(b) + "' strands=" +
                          std::to_string(b.strands) + " k=" + std::to_string(k));
        }
    });
    return rep;
}

/// Entrywise two-row correspondence, the trace relation, and the sign
/// relation between the two invariants.
inline SuiteReport r2_correspondence_check(int max_strands, int k, double tol = 1e-10) {
    SuiteReport rep;
    rep.name = "r2";
    Complex factor = Complex(0, 1) * unit_phase(3 * std::numbers::pi / (2 * k));
    for (int n = 2; n <= max_strands; ++n) {
        for (const auto& shape : enumerate_diagrams(n, k, 2)) {
            auto tabs = enumerate_tableaux(shape, k, 2);
            if (tabs.empty()) continue;
            int h = shape.row_length(1) - shape.row_length(2) + 1;
            for (int i = 1; i <= n - 1; ++i) {
                Matrix P = jw_generator(shape, k, 2, i, 1);
                Matrix R = rep_generator(n, k, h, i, 1);
                double dev = (P - factor * R).cwiseAbs().maxCoeff();
                rep.check(dev < tol, dev,
                          "generator correspondence n=" + std::to_string(n) +
                              " h=" + std::to_string(h) + " i=" + std::to_string(i));
            }
        }
    }
    // Trace relation and sign relation on a deterministic braid sample.
    PathRepCache pc;
    JwRepCache jc;
    SampleRng rng(20260810, 0);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + (int)rng.below((uint64_t)std::max(1, max_strands - 1));
        n = std::min(n, max_strands);
        if (n < 2) continue;
        std::vector<int> w;
        int len = (int)rng.below(7);
        for (int j = 0; j < len; ++j) {
            int g = 1 + (int)rng.below((uint64_t)(n - 1));
            w.push_back(rng.below(2) ? g : -g);
        }
        BraidWord b(n, w);
        Complex lhs = jc.markov_trace(b, k, 2);
        Complex rhs = std::pow(factor, exponent_sum(b)) * pc.markov_trace(b, k);
        double dev = std::abs(lhs - rhs);
        rep.check(dev < 1e-9, dev, "trace relation on '" + to_string(b) + "'");
        double sign = ((closure_writhe(b) + n - 1) % 2 == 0) ? 1.0 : -1.0;
        double dev2 = std::abs(jc.homfly(b, k, 2) - sign * pc.jones(b, k));
        rep.check(dev2 < 1e-9, dev2, "sign relation on '" + to_string(b) + "'");
    }
    return rep;
}

/// Random Markov-move sequences leave both invariants unchanged.
inline SuiteReport invariance_suite(const BraidWord& start, int k, int r, int moves,
                                    RngConfig rng_cfg, double tol = 1e-9) {
    SuiteReport rep;
    rep.name = "markov";
    PathRepCache pc;
    JwRepCache jc;
    Complex base_jones = pc.jones(start, k);
    Complex base_homfly = jc.homfly(start, k, r);
    BraidWord b = start;
    SampleRng rng(rng_cfg.seed, 1);
    for (int m = 0; m < moves; ++m) {
        // Bias toward conjugation; cap strand growth so sector dimensions
        // stay at desk scale.
        uint64_t which = rng.below(4);
        if (which == 0 && b.strands <= 6) {
            b = markov_stabilize(b, rng.below(2) ? 1 : -1);
        } else if (b.strands >= 2) {
            int len = 1 + (int)rng.below(2);
            std::vector<int> w;
            for (int j = 0; j < len; ++j) {
                int g = 1 + (int)rng.below((uint64_t)(b.strands - 1));
                w.push_back(rng.below(2) ? g : -g);
            }
            b = markov_conjugate(b, BraidWord(b.strands, w));
        }
        double dj = std::abs(pc.jones(b, k) - base_jones);
        rep.check(dj < tol, dj, "jones drift after move " + std::to_string(m + 1));
        double dh = std::abs(jc.homfly(b, k, r) - base_homfly);
        rep.check(dh < tol, dh, "homfly drift after move " + std::to_string(m + 1));
    }
    return rep;
}

}  // namespace braidtrace
