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
 * One-clean-qubit style estimation of normalized traces of encoded braid
 * circuits, and the end-to-end Jones / HOMFLY estimators: classical sector
 * sampling, uniformly random basis strings, and per-sample diagonal matrix
 * elements, optionally degraded to +/-1 measurement shots.
 *
 * Determinism: every sample owns an RNG substream derived from (seed,
 * sample index) and results are reduced in index order, so estimates are
 * bit-identical for a fixed seed regardless of the worker count.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidtrace/braid.hpp"
#include "braidtrace/jones_wenzl.hpp"
#include "braidtrace/jw_encoding.hpp"
#include "braidtrace/numeric.hpp"
#include "braidtrace/path_encoding.hpp"
#include "braidtrace/path_model.hpp"
#include "braidtrace/sparse_state.hpp"
#include "braidtrace/threading.hpp"

namespace braidtrace {

struct RngConfig {
    uint64_t seed = 0;
};

namespace detail {
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}
}  // namespace detail

/// Deterministic per-sample random stream. Draw helpers avoid
/// std::uniform_* distributions so sequences are identical across
/// implementations.
class SampleRng {
  public:
    SampleRng(uint64_t seed, uint64_t stream) {
        uint64_t s = seed;
        detail::splitmix64(s);
        s ^= 0x6a09e667f3bcc909ull + stream;
        engine_.seed(detail::splitmix64(s));
    }

    uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound) by masked rejection.
    uint64_t below(uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("bound must be positive");
        uint64_t mask = bound - 1;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        mask |= mask >> 32;
        for (;;) {
            uint64_t v = next() & mask;
            if (v < bound) return v;
        }
    }

    /// Uniform in [0, 1) with 53 random bits.
    double unit_real() { return (double)(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit_real() < p; }

  private:
    std::mt19937_64 engine_;
};

enum class TraceMode { exact, monte_carlo, shots };

inline std::string to_string(TraceMode m) {
    switch (m) {
        case TraceMode::exact: return "exact";
        case TraceMode::monte_carlo: return "monte_carlo";
        case TraceMode::shots: return "shots";
    }
    return "unknown";
}

inline TraceMode trace_mode_from_string(const std::string& s) {
    if (s == "exact") return TraceMode::exact;
    if (s == "monte_carlo") return TraceMode::monte_carlo;
    if (s == "shots") return TraceMode::shots;
    throw std::invalid_argument("unknown trace mode '" + s + "'");
}

/// A normalized-trace estimate with its statistical standard error.
struct TraceEstimate {
    Complex value{};
    double std_error = 0;
    int64_t samples = 0;
    TraceMode mode = TraceMode::exact;
};

namespace detail {

/// Mean and standard error of a complex sample vector, reduced in index
/// order. std_error combines the component standard errors in quadrature.
inline TraceEstimate reduce_samples(const std::vector<Complex>& vals, TraceMode mode) {
    TraceEstimate est;
    est.mode = mode;
    est.samples = (int64_t)vals.size();
    Complex sum = 0;
    for (const Complex& v : vals) sum += v;
    est.value = sum / (double)vals.size();
    if (vals.size() > 1) {
        double vr = 0, vi = 0;
        for (const Complex& v : vals) {
            vr += (v.real() - est.value.real()) * (v.real() - est.value.real());
            vi += (v.imag() - est.value.imag()) * (v.imag() - est.value.imag());
        }
        double m = (double)vals.size();
        est.std_error = std::sqrt((vr + vi) / (m - 1) / m);
    }
    return est;
}

/// Splits a shot budget between the real and imaginary interferometry
/// variants and reduces the +/-1 outcomes.
struct ShotAccumulator {
    int64_t real_shots, imag_shots;
    std::vector<double> outcomes;  // +/-1 draws, real block then imaginary

    explicit ShotAccumulator(int64_t samples)
        : real_shots((samples + 1) / 2), imag_shots(samples / 2), outcomes(samples, 0.0) {}

    bool is_real_shot(int64_t s) const { return s < real_shots; }

    void record(int64_t s, Complex diagonal, SampleRng& rng) {
        double mean = is_real_shot(s) ? diagonal.real() : diagonal.imag();
        mean = std::clamp(mean, -1.0, 1.0);
        outcomes[s] = rng.bernoulli((1.0 + mean) / 2.0) ? 1.0 : -1.0;
    }

    TraceEstimate reduce() const {
        TraceEstimate est;
        est.mode = TraceMode::shots;
        est.samples = (int64_t)outcomes.size();
        double mr = 0, mi = 0;
        for (int64_t s = 0; s < real_shots; ++s) mr += outcomes[s];
        for (int64_t s = real_shots; s < (int64_t)outcomes.size(); ++s) mi += outcomes[s];
        mr = real_shots ? mr / (double)real_shots : 0.0;
        mi = imag_shots ? mi / (double)imag_shots : 0.0;
        est.value = Complex(mr, mi);
        auto block_var = [&](int64_t lo, int64_t hi, double mean) {
            if (hi - lo < 2) return 0.0;
            double v = 0;
            for (int64_t s = lo; s < hi; ++s) v += (outcomes[s] - mean) * (outcomes[s] - mean);
            return v / (double)(hi - lo - 1) / (double)(hi - lo);
        };
        est.std_error = std::sqrt(block_var(0, real_shots, mr) +
                                  block_var(real_shots, (int64_t)outcomes.size(), mi));
        return est;
    }
};

inline BasisString random_registers(int registers, int beta, SampleRng& rng) {
    BasisString x(registers);
    for (int t = 0; t < registers; ++t) x[t] = (uint32_t)rng.below(1ull << beta);
    return x;
}

}  // namespace detail

/// Estimates 2^{-nb} Tr U(b) for the encoded circuit whose single-crossing
/// applier is `apply` (signature: SparseAmplitudeState(const
/// SparseAmplitudeState&, int position, int sign)). Exact mode sums every
/// basis string; monte_carlo averages diagonal elements over uniform
/// strings; shots replaces each element by a +/-1 draw of matching mean.
template <class ApplyCrossing>
TraceEstimate estimate_normalized_trace(ApplyCrossing&& apply, const BraidWord& b, int registers,
                                        int beta, TraceMode mode, int64_t samples,
                                        RngConfig rng) {
    auto diagonal = [&](BasisString x) -> Complex {
        SparseAmplitudeState state = SparseAmplitudeState::basis_state(x);
        for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it)
            state = apply(state, std::abs(*it), *it > 0 ? 1 : -1);
        return state.amplitude(x);
    };
    if (mode == TraceMode::exact) {
        if (registers * beta > kMaxExactBits)
            throw std::invalid_argument("exact mode limited to n*beta <= 24 bits");
        const uint64_t total = 1ull << (registers * beta);
        const uint32_t mask = (1u << beta) - 1;
        Complex sum = 0;
        BasisString x(registers);
        for (uint64_t packed = 0; packed < total; ++packed) {
            for (int t = 0; t < registers; ++t)
                x[t] = (uint32_t)(packed >> ((registers - 1 - t) * beta)) & mask;
            sum += diagonal(x);
        }
        TraceEstimate est;
        est.value = sum / (double)total;
        est.samples = (int64_t)total;
        est.mode = mode;
        return est;
    }
    if (samples < 1) throw std::invalid_argument("samples must be positive");
    if (mode == TraceMode::monte_carlo) {
        std::vector<Complex> vals(samples);
        parallel_for(samples, [&](int64_t s) {
            SampleRng r(rng.seed, (uint64_t)s);
            vals[s] = diagonal(detail::random_registers(registers, beta, r));
        });
        return detail::reduce_samples(vals, mode);
    }
    detail::ShotAccumulator acc(samples);
    parallel_for(samples, [&](int64_t s) {
        SampleRng r(rng.seed, (uint64_t)s);
        Complex d = diagonal(detail::random_registers(registers, beta, r));
        acc.record(s, d, r);
    });
    return acc.reduce();
}

/// Sector distribution p(h) proportional to sin(pi h / k) |Omega_{n,k,h}|,
/// computed from exact counts.
inline std::vector<double> sector_distribution(int n, int k) {
    if (k < 3) throw std::invalid_argument("k must be at least 3");
    std::vector<BigInt> counts(k);
    BigInt largest = 0;
    for (int h = 1; h <= k - 1; ++h) {
        counts[h] = path_count(k, n, 1, h);
        largest = std::max(largest, counts[h]);
    }
    std::vector<double> p(k, 0.0);
    if (largest == 0) return p;
    double total = 0;
    for (int h = 1; h <= k - 1; ++h) {
        // Exact ratio to the largest count keeps doubles in range for any n.
        p[h] = std::sin(std::numbers::pi * h / k) * to_double(BigRat(counts[h], largest));
        total += p[h];
    }
    for (int h = 1; h <= k - 1; ++h) p[h] /= total;
    return p;
}

/// Draws a sector from p(h) via its cumulative distribution.
inline int sample_sector_h(int n, int k, SampleRng& rng) {
    auto p = sector_distribution(n, k);
    double u = rng.unit_real();
    double acc = 0;
    int last = 0;
    for (int h = 1; h <= k - 1; ++h) {
        if (p[h] == 0.0) continue;
        acc += p[h];
        last = h;
        if (u < acc) return h;
    }
    return last;  // u landed in the rounding tail
}

/// Diagram distribution p(lambda) proportional to S^(lambda) |T^(lambda)|.
inline std::vector<std::pair<YoungDiagram, double>> diagram_distribution(int n, int k, int r) {
    auto shapes = enumerate_diagrams(n, k, r);
    Profile empty;
    empty.overhang.assign(r - 1, 0);
    std::vector<BigInt> counts(shapes.size());
    BigInt largest = 0;
    for (size_t j = 0; j < shapes.size(); ++j) {
        counts[j] = completion_count(empty, shapes[j], n, k, r);
        largest = std::max(largest, counts[j]);
    }
    std::vector<std::pair<YoungDiagram, double>> out;
    if (largest == 0) return out;
    double total = 0;
    for (size_t j = 0; j < shapes.size(); ++j) {
        double w = counts[j] == 0
                       ? 0.0
                       : schur_weight(shapes[j], k, r) * to_double(BigRat(counts[j], largest));
        out.emplace_back(shapes[j], w);
        total += w;
    }
    for (auto& [shape, w] : out) w /= total;
    return out;
}

/// Draws a diagram from p(lambda) via its cumulative distribution.
inline YoungDiagram sample_sector_lambda(int n, int k, int r, SampleRng& rng) {
    auto dist = diagram_distribution(n, k, r);
    if (dist.empty()) throw std::invalid_argument("no admissible diagrams");
    double u = rng.unit_real();
    double acc = 0;
    const YoungDiagram* last = nullptr;
    for (const auto& [shape, p] : dist) {
        if (p == 0.0) continue;
        acc += p;
        last = &shape;
        if (u < acc) return shape;
    }
    return *last;
}

/// Full pipeline result: the invariant estimate together with the
/// Markov-trace-level estimate and prefactor it was assembled from.
struct EstimateReport {
    Complex value{};
    double std_error = 0;
    double systematic_bound = 0;  // rounding + stuck budget, scaled to `value`
    int64_t samples = 0;
    TraceMode mode = TraceMode::exact;
    Complex prefactor{};
    Complex markov_trace{};
    uint64_t seed = 0;
    int ancilla_qubits = 0;  // clean-qubit workspace of the simulated machine
};

namespace detail {

inline int bits_for(int values) {
    int bits = 0;
    while ((1 << bits) < values) ++bits;
    return std::max(bits, 1);
}

inline double encoding_error_budget(int n, int beta) {
    return rounding_error_bound(n, beta) +
           2.0 * (1.0 - std::pow(1.0 - std::pow(2.0, -beta), n));
}

/// Shared sampling pipeline: draw a sector per sample, then one uniform
/// string, then the diagonal element of the sector's encoded circuit.
template <class SectorOf, class DiagonalOf>
TraceEstimate sampled_markov_trace(const BraidWord& b, int beta, TraceMode mode, int64_t samples,
                                   RngConfig rng, SectorOf&& sector_of, DiagonalOf&& diagonal_of) {
    if (samples < 1) throw std::invalid_argument("samples must be positive");
    const int n = b.strands;
    if (mode == TraceMode::monte_carlo) {
        std::vector<Complex> vals(samples);
        parallel_for(samples, [&](int64_t s) {
            SampleRng r(rng.seed, (uint64_t)s);
            int sector = sector_of(r);
            BasisString x = random_registers(n, beta, r);
            vals[s] = diagonal_of(sector, x);
        });
        return reduce_samples(vals, mode);
    }
    ShotAccumulator acc(samples);
    parallel_for(samples, [&](int64_t s) {
        SampleRng r(rng.seed, (uint64_t)s);
        int sector = sector_of(r);
        BasisString x = random_registers(n, beta, r);
        acc.record(s, diagonal_of(sector, x), r);
    });
    return acc.reduce();
}

}  // namespace detail

/// End-to-end Jones estimator: sector-sampled encoded normalized traces
/// assembled into the Markov trace, times the closure prefactor.
inline EstimateReport estimate_jones(const BraidWord& b, int k, int beta, TraceMode mode,
                                     int64_t samples, RngConfig rng) {
    const int n = b.strands;
    if (beta < 1 || beta > kMaxPrecisionBits)
        throw std::invalid_argument("precision bits out of range");
    EstimateReport rep;
    rep.mode = mode;
    rep.seed = rng.seed;
    rep.prefactor = jones_prefactor(b, k);
    rep.ancilla_qubits = detail::bits_for(k - 1);
    auto p = sector_distribution(n, k);
    std::vector<EncodingTable> tables(k);
    for (int h = 1; h <= k - 1; ++h)
        if (p[h] > 0) tables[h] = build_encoding_table(n, k, h, beta);

    TraceEstimate trace;
    if (mode == TraceMode::exact) {
        if (n * beta > kMaxExactBits)
            throw std::invalid_argument("exact mode limited to n*beta <= 24 bits");
        Complex total = 0;
        for (int h = 1; h <= k - 1; ++h)
            if (p[h] > 0) total += p[h] * encoded_normalized_trace(b, k, h, beta);
        trace.value = total;
        trace.mode = mode;
        trace.samples = (int64_t)1 << (n * beta);
    } else {
        trace = detail::sampled_markov_trace(
            b, beta, mode, samples, rng,
            [&](SampleRng& r) {
                double u = r.unit_real();
                double acc = 0;
                int last = 1;
                for (int h = 1; h <= k - 1; ++h) {
                    if (p[h] == 0.0) continue;
                    acc += p[h];
                    last = h;
                    if (u < acc) return h;
                }
                return last;
            },
            [&](int h, const BasisString& x) {
                return apply_encoded_braid(b, tables[h], x).amplitude(x);
            });
    }
    rep.markov_trace = trace.value;
    rep.std_error = trace.std_error * std::abs(rep.prefactor);
    rep.samples = trace.samples;
    rep.value = rep.prefactor * trace.value;
    rep.systematic_bound = std::abs(rep.prefactor) * detail::encoding_error_budget(n, beta);
    return rep;
}

/// End-to-end HOMFLY estimator with diagram sampling and the tableau
/// encoding.
inline EstimateReport estimate_homfly(const BraidWord& b, int k, int r, int beta, TraceMode mode,
                                      int64_t samples, RngConfig rng) {
    detail::check_kr(k, r);
    const int n = b.strands;
    if (beta < 1 || beta > kMaxPrecisionBits)
        throw std::invalid_argument("precision bits out of range");
    EstimateReport rep;
    rep.mode = mode;
    rep.seed = rng.seed;
    rep.prefactor = homfly_prefactor(b, k, r);
    rep.ancilla_qubits = (r - 1) * detail::bits_for(k - r + 1);
    auto dist = diagram_distribution(n, k, r);
    std::vector<RowCutoffTable> tables(dist.size());
    for (size_t j = 0; j < dist.size(); ++j)
        if (dist[j].second > 0) tables[j] = build_row_cutoffs(dist[j].first, k, r, beta);

    TraceEstimate trace;
    if (mode == TraceMode::exact) {
        if (n * beta > kMaxExactBits)
            throw std::invalid_argument("exact mode limited to n*beta <= 24 bits");
        Complex total = 0;
        for (size_t j = 0; j < dist.size(); ++j)
            if (dist[j].second > 0)
                total +=
                    dist[j].second * encoded_normalized_trace_jw(b, dist[j].first, k, r, beta);
        trace.value = total;
        trace.mode = mode;
        trace.samples = (int64_t)1 << (n * beta);
    } else {
        trace = detail::sampled_markov_trace(
            b, beta, mode, samples, rng,
            [&](SampleRng& r2) {
                double u = r2.unit_real();
                double acc = 0;
                int last = 0;
                for (size_t j = 0; j < dist.size(); ++j) {
                    if (dist[j].second == 0.0) continue;
                    acc += dist[j].second;
                    last = (int)j;
                    if (u < acc) return (int)j;
                }
                return last;
            },
            [&](int j, const BasisString& x) {
                return apply_encoded_braid_jw(b, tables[j], x).amplitude(x);
            });
    }
    rep.markov_trace = trace.value;
    rep.std_error = trace.std_error * std::abs(rep.prefactor);
    rep.samples = trace.samples;
    rep.value = rep.prefactor * trace.value;
    rep.systematic_bound = std::abs(rep.prefactor) * detail::encoding_error_budget(n, beta);
    return rep;
}

}  // namespace braidtrace
