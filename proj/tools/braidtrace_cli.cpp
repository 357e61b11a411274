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

// Command-line front end: invariant estimation, exact evaluation, table
// dumps, and verification suites. JSON on stdout is the machine interface;
// --table renders a human view. Identical arguments and seed produce
// byte-identical JSON regardless of BRAIDTRACE_THREADS.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidtrace/braid.hpp"
#include "braidtrace/dqc1.hpp"
#include "braidtrace/jones_wenzl.hpp"
#include "braidtrace/jw_encoding.hpp"
#include "braidtrace/oracle.hpp"
#include "braidtrace/path_encoding.hpp"
#include "braidtrace/path_model.hpp"
#include "braidtrace/verify.hpp"

namespace bt = braidtrace;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitValidation = 2;

json complex_json(bt::Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

struct BraidArgs {
    std::string word;
    std::string file;
    int strands = 0;

    bt::BraidWord resolve() const {
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw std::invalid_argument("cannot open braid file '" + file + "'");
            std::string header;
            std::getline(in, header);
            if (header.rfind("strands=", 0) != 0)
                throw std::invalid_argument("braid file must start with 'strands=<n>'");
            int n = std::stoi(header.substr(8));
            std::stringstream rest;
            rest << in.rdbuf();
            return bt::parse_braid(rest.str(), n);
        }
        if (strands < 1) throw std::invalid_argument("--strands is required with --braid");
        return bt::parse_braid(word, strands);
    }
};

void add_braid_options(CLI::App* cmd, BraidArgs& args) {
    cmd->add_option("--braid", args.word, "braid word: whitespace-separated signed generators");
    cmd->add_option("--braid-file", args.file,
                    "file with a 'strands=<n>' header line followed by the braid word");
    cmd->add_option("--strands", args.strands, "strand count for --braid");
}

int default_precision_bits(int strands) {
    int log2n = 0;
    while ((1 << log2n) < strands) ++log2n;
    return std::max(4, log2n + 3);
}

void warn_about_bounds(const bt::BraidWord& b, int beta, const bt::EstimateReport& rep) {
    double trace_bound = bt::rounding_error_bound(b.strands, beta);
    if (trace_bound > 0.5)
        std::cerr << "warning: rounding bound 2n/2^beta = " << trace_bound
                  << " exceeds 0.5; increase --beta for a meaningful estimate\n";
    if (rep.mode != bt::TraceMode::exact && rep.systematic_bound > rep.std_error)
        std::cerr << "warning: systematic encoding bound " << rep.systematic_bound
                  << " dominates the statistical error " << rep.std_error << "\n";
}

json report_json(const bt::EstimateReport& rep) {
    json out;
    out["value"] = complex_json(rep.value);
    out["std_error"] = rep.std_error;
    out["systematic_bound"] = rep.systematic_bound;
    out["samples"] = rep.samples;
    out["mode"] = bt::to_string(rep.mode);
    out["prefactor"] = complex_json(rep.prefactor);
    out["markov_trace"] = complex_json(rep.markov_trace);
    out["seed"] = rep.seed;
    return out;
}

void print_report(const bt::EstimateReport& rep, bool table) {
    if (!table) {
        std::cout << report_json(rep).dump(2) << "\n";
        return;
    }
    std::cout << "value            " << rep.value.real() << (rep.value.imag() < 0 ? " - " : " + ")
              << std::abs(rep.value.imag()) << "i\n"
              << "std_error        " << rep.std_error << "\n"
              << "systematic_bound " << rep.systematic_bound << "\n"
              << "samples          " << rep.samples << "\n"
              << "mode             " << bt::to_string(rep.mode) << "\n"
              << "seed             " << rep.seed << "\n";
}

json exact_value_json(bt::Complex value, bt::Complex prefactor, bt::Complex trace) {
    json out;
    out["value"] = complex_json(value);
    out["prefactor"] = complex_json(prefactor);
    out["markov_trace"] = complex_json(trace);
    return out;
}

json count_json(const bt::BigInt& v) {
    if (v <= bt::BigInt(9007199254740992ll)) return json(v.convert_to<int64_t>());
    return json(v.str());
}

int run_tables(const std::string& what, const BraidArgs& braid, int k, int r, int h, int beta,
               const std::string& diagram_text, int position, int generator, int sign) {
    if (what == "cutoffs") {
        bt::BraidWord b = braid.resolve();
        int n = b.strands;
        auto T = bt::build_encoding_table(n, k, h, beta);
        json rows = json::array();
        for (int a = 1; a <= k - 1; ++a)
            for (int t = 0; t < n; ++t)
                if (T.has(a, t))
                    rows.push_back(json{{"a", a}, {"t", t}, {"c", (uint64_t)T.cutoff(a, t)}});
        json out{{"n", n}, {"k", k}, {"h", h}, {"beta", beta}, {"cutoffs", rows}};
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    if (what == "weights") {
        bt::BraidWord b = braid.resolve();
        int n = b.strands;
        auto dist = bt::diagram_distribution(n, k, r);
        bt::Profile empty;
        empty.overhang.assign(r - 1, 0);
        json rows = json::array();
        for (const auto& [shape, p] : dist) {
            json row;
            row["diagram"] = shape.rows;
            row["tableaux"] = count_json(bt::completion_count(empty, shape, n, k, r));
            row["weight"] = bt::schur_weight(shape, k, r);
            row["p"] = p;
            rows.push_back(std::move(row));
        }
        json out{{"n", n}, {"k", k}, {"r", r}, {"weights", rows}};
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    if (what == "matchings") {
        std::istringstream ds(diagram_text);
        std::vector<int> rows;
        int v;
        while (ds >> v) rows.push_back(v);
        if (rows.empty()) throw std::invalid_argument("--diagram is required for matchings");
        bt::YoungDiagram shape{rows};
        auto T = bt::build_row_cutoffs(shape, k, r, beta);
        if (position < 1 || position > T.n - 1)
            throw std::invalid_argument("--position out of range");
        json entries = json::array();
        for (int pid = 0; pid < (int)T.profiles.size(); ++pid) {
            if (!T.has(pid, position - 1)) continue;
            auto M = bt::build_matching(T, position, T.profiles[pid]);
            for (const auto& entry : M.entries) {
                json e;
                e["profile"] = T.profiles[pid].overhang;
                e["rows"] = {entry.row_first, entry.row_second};
                json pairs = json::array();
                for (const auto& [a, b2] : entry.pairs)
                    pairs.push_back({{a.first, a.second}, {b2.first, b2.second}});
                e["pairs"] = pairs;
                json stuck = json::array();
                for (const auto& s : entry.stuck_first) stuck.push_back({s.first, s.second});
                for (const auto& s : entry.stuck_second) stuck.push_back({s.first, s.second});
                e["stuck"] = stuck;
                entries.push_back(std::move(e));
            }
        }
        json out{{"diagram", shape.rows},   {"k", k},
                 {"r", r},                  {"beta", beta},
                 {"position", position},    {"matchings", entries}};
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    if (what == "matrices") {
        bt::BraidWord b = braid.resolve();
        int n = b.strands;
        auto M = bt::rep_generator(n, k, h, generator, sign);
        json rows = json::array();
        for (int rr = 0; rr < M.rows(); ++rr) {
            json row = json::array();
            for (int cc = 0; cc < M.cols(); ++cc)
                row.push_back({M(rr, cc).real(), M(rr, cc).imag()});
            rows.push_back(std::move(row));
        }
        json out{{"n", n},
                 {"k", k},
                 {"h", h},
                 {"generator", generator},
                 {"sign", sign},
                 {"matrix", rows}};
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    throw std::invalid_argument("unknown table kind '" + what + "'");
}

int run_verify(const std::string& suite, int max_strands, int k, int r, int moves, uint64_t seed,
               const BraidArgs& braid) {
    bt::SuiteReport rep;
    if (suite == "relations") {
        rep = bt::relations_suite(max_strands, k, r);
    } else if (suite == "oracle") {
        rep = bt::oracle_agreement_suite(max_strands, 5, 3, k);
    } else if (suite == "r2") {
        rep = bt::r2_correspondence_check(max_strands, k);
    } else if (suite == "markov") {
        bt::BraidWord b = (braid.word.empty() && braid.file.empty() && braid.strands == 0)
                              ? bt::BraidWord(2, {1, 1, 1})
                              : braid.resolve();
        rep = bt::invariance_suite(b, k, r, moves, bt::RngConfig{seed});
    } else {
        throw std::invalid_argument("unknown suite '" + suite + "'");
    }
    json out{{"suite", rep.name},
             {"checks", rep.checks},
             {"max_deviation", rep.max_deviation},
             {"passed", rep.passed()},
             {"violations", rep.violations}};
    std::cout << out.dump(2) << "\n";
    return rep.passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jones and HOMFLY invariants of braid trace closures at roots of unity,\n"
                 "estimated by simulating the one-clean-qubit trace algorithm or evaluated\n"
                 "exactly from the dense representations"};
    app.require_subcommand(1);

    BraidArgs braid;
    int k = 5, r = 2, h = 1, beta = 0, position = 1, generator = 1, sign = 1;
    int max_r = 4, max_strands = 4, moves = 20;
    int64_t samples = 10000;
    uint64_t seed = 0;
    std::string mode_name = "monte_carlo", what = "cutoffs", suite = "oracle", diagram_text;
    bool table = false, json_flag = false;

    auto add_common = [&](CLI::App* cmd) {
        add_braid_options(cmd, braid);
        cmd->add_option("--k", k, "order of the root of unity t = e^{i 2 pi / k}");
        cmd->add_flag("--table", table, "human-readable output instead of JSON");
        cmd->add_flag("--json", json_flag, "JSON output (the default)");
    };

    auto* eval_jones = app.add_subcommand("eval-jones", "estimate the Jones value");
    add_common(eval_jones);
    eval_jones->add_option("--beta", beta, "register precision bits (default max(4, log2(n)+3))");
    eval_jones->add_option("--samples", samples, "sample count for sampling modes");
    eval_jones->add_option("--seed", seed, "random seed");
    eval_jones->add_option("--mode", mode_name, "exact | monte_carlo | shots");

    auto* eval_homfly = app.add_subcommand("eval-homfly", "estimate the HOMFLY value");
    add_common(eval_homfly);
    eval_homfly->add_option("--r", r, "number of tableau rows (the sl_r invariant)");
    eval_homfly->add_option("--max-r", max_r, "largest permitted r");
    eval_homfly->add_option("--beta", beta, "register precision bits");
    eval_homfly->add_option("--samples", samples, "sample count for sampling modes");
    eval_homfly->add_option("--seed", seed, "random seed");
    eval_homfly->add_option("--mode", mode_name, "exact | monte_carlo | shots");

    auto* exact_jones = app.add_subcommand("exact-jones", "evaluate the Jones value exactly");
    add_common(exact_jones);

    auto* exact_homfly = app.add_subcommand("exact-homfly", "evaluate the HOMFLY value exactly");
    add_common(exact_homfly);
    exact_homfly->add_option("--r", r, "number of tableau rows");
    exact_homfly->add_option("--max-r", max_r, "largest permitted r");

    auto* tables = app.add_subcommand("tables", "dump encoding tables and weights as JSON");
    add_common(tables);
    tables->add_option("--what", what, "cutoffs | weights | matchings | matrices");
    tables->add_option("--sector", h, "final rung h for cutoffs/matrices");
    tables->add_option("--r", r, "rows for weights/matchings");
    tables->add_option("--beta", beta, "precision bits for cutoffs/matchings");
    tables->add_option("--diagram", diagram_text, "target diagram rows, e.g. '2 1'");
    tables->add_option("--position", position, "crossing position for matchings");
    tables->add_option("--generator", generator, "generator index for matrices");
    tables->add_option("--sign", sign, "generator sign for matrices");

    auto* verify = app.add_subcommand("verify", "run a self-check suite; nonzero exit on failure");
    add_common(verify);
    verify->add_option("--suite", suite, "relations | markov | oracle | r2");
    verify->add_option("--max-strands", max_strands, "strand bound for grid suites");
    verify->add_option("--r", r, "rows for relations/markov");
    verify->add_option("--moves", moves, "move count for the markov suite");
    verify->add_option("--seed", seed, "seed for randomized suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (eval_jones->parsed() || eval_homfly->parsed()) {
            bt::BraidWord b = braid.resolve();
            if (beta == 0) beta = default_precision_bits(b.strands);
            bt::TraceMode mode = bt::trace_mode_from_string(mode_name);
            if (mode == bt::TraceMode::exact && b.strands * beta > bt::kMaxExactBits)
                throw std::invalid_argument("mode=exact requires n*beta <= 24");
            if (samples < 1) throw std::invalid_argument("--samples must be positive");
            if (beta < 1) throw std::invalid_argument("--beta must be positive");
            bt::EstimateReport rep;
            if (eval_jones->parsed()) {
                rep = bt::estimate_jones(b, k, beta, mode, samples, bt::RngConfig{seed});
            } else {
                if (r > max_r)
                    throw std::invalid_argument(
                        "--r exceeds --max-r (runtime grows exponentially with r)");
                rep = bt::estimate_homfly(b, k, r, beta, mode, samples, bt::RngConfig{seed});
            }
            warn_about_bounds(b, beta, rep);
            print_report(rep, table);
            return kExitOk;
        }
        if (exact_jones->parsed()) {
            bt::BraidWord b = braid.resolve();
            bt::Complex trace = bt::markov_trace_path(b, k);
            bt::Complex pref = bt::jones_prefactor(b, k);
            std::cout << exact_value_json(pref * trace, pref, trace).dump(2) << "\n";
            return kExitOk;
        }
        if (exact_homfly->parsed()) {
            if (r > max_r)
                throw std::invalid_argument(
                    "--r exceeds --max-r (runtime grows exponentially with r)");
            bt::BraidWord b = braid.resolve();
            bt::Complex trace = bt::markov_trace_jw(b, k, r);
            bt::Complex pref = bt::homfly_prefactor(b, k, r);
            std::cout << exact_value_json(pref * trace, pref, trace).dump(2) << "\n";
            return kExitOk;
        }
        if (tables->parsed()) {
            if (beta == 0) beta = 4;
            return run_tables(what, braid, k, r, h, beta, diagram_text, position, generator,
                              sign);
        }
        if (verify->parsed()) return run_verify(suite, max_strands, k, r, moves, seed, braid);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitOk;
}
