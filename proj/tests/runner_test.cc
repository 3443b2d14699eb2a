// Copyright 2026 The posthoc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <set>
#include <sstream>

#include "gtest/gtest.h"

#include "oracle.h"
#include "posthoc/clockham/circuit.h"
#include "posthoc/csscode/encode.h"
#include "posthoc/noise/estimate.h"
#include "posthoc/runner/config.h"
#include "posthoc/runner/output.h"
#include "posthoc/runner/selftest.h"
#include "posthoc/runner/sweep.h"

using namespace posthoc;

namespace {

std::string config_error(std::string_view text) {
    try {
        parse_sweep_config(text, "cfg.json");
    } catch (const ConfigError &e) {
        return e.what();
    }
    return "";
}

SweepConfig rep3(SweepMode mode = SweepMode::exact) {
    SweepConfig cfg = default_sweep("repetition:3");
    cfg.mode = mode;
    return cfg;
}

const SweepResult &rep3_coarse() {
    static const SweepResult r = run_sweep(rep3());
    return r;
}

}  // namespace

TEST(config, minimal_document_gets_defaults) {
    const SweepConfig cfg = parse_sweep_config(R"({"spec_version": 1, "code": "repetition:3", "channel": "bitflip"})");
    EXPECT_EQ(cfg.code, "repetition:3");
    EXPECT_EQ(cfg.channel, ChannelFamily::bitflip);
    EXPECT_EQ(cfg.grid, coarse_grid());
    EXPECT_EQ(cfg.mode, SweepMode::exact);
    EXPECT_EQ(cfg.seed, 1u);
}

TEST(config, full_document) {
    const SweepConfig cfg = parse_sweep_config(R"cfg({
  "spec_version": 1,
  "instance": {"gates": ["X", "D(pi/8)"], "input_bit": 0, "claimed_accept": true, "hamiltonian": "example"},
  "code": "steane",
  "channel": "depolarizing",
  "grid": {"start": 0.05, "stop": 0.15, "count": 12},
  "reps": 4000,
  "mode": "mc",
  "seed": 7,
  "threads": 2
})cfg");
    EXPECT_EQ(cfg.grid, steane_grid());
    EXPECT_EQ(cfg.reps, 4000);
    EXPECT_EQ(cfg.mode, SweepMode::mc);
    EXPECT_EQ(cfg.seed, 7u);
    EXPECT_EQ(cfg.threads, 2);
    EXPECT_EQ(parse_sweep_config(to_json(cfg)).grid, cfg.grid);
}

TEST(config, diagnostics_name_line_and_field) {
    EXPECT_EQ(config_error("{\n  \"spec_version\": 1,\n  \"code\": \"repetition:3\",\n  \"channel\": \"bitflip\",\n"
                           "  \"grid\": [0.1, 0.05]\n}"),
              "cfg.json:5: grid: values must be strictly increasing");
    EXPECT_EQ(config_error("{\n  \"spec_version\": 1,\n  \"code\": \"repetition:3\",\n  \"channel\": \"bitflip\",\n"
                           "  \"reps\": \"many\"\n}"),
              "cfg.json:5: reps: wrong type");
    EXPECT_EQ(config_error("{\n  \"spec_version\": 1,\n  \"code\": \"repetition:3\",\n  \"chanel\": \"bitflip\"\n}"),
              "cfg.json:4: chanel: unknown field");
}

TEST(config, rejects_bad_documents) {
    EXPECT_NE(config_error(R"({"code": "repetition:3", "channel": "bitflip"})").find("spec_version"),
              std::string::npos);
    EXPECT_NE(config_error(R"({"spec_version": 2, "code": "repetition:3", "channel": "bitflip"})").find("version"),
              std::string::npos);
    EXPECT_NE(config_error(R"({"spec_version": 1, "channel": "bitflip"})").find("code: missing"), std::string::npos);
    EXPECT_NE(config_error(R"({"spec_version": 1, "code": "surface", "channel": "bitflip"})").find("code"),
              std::string::npos);
    EXPECT_NE(config_error(R"({"spec_version": 1, "code": "steane", "channel": "amplitude"})").find("channel"),
              std::string::npos);
    EXPECT_NE(config_error(R"({"spec_version": 1, "code": "steane", "channel": "bitflip", "grid": [1.5]})")
                  .find("outside"),
              std::string::npos);
    EXPECT_NE(config_error(R"({"spec_version": 1, "code": "steane", "channel": "bitflip", "mode": "mc", "reps": 0})")
                  .find("reps"),
              std::string::npos);
    EXPECT_EQ(config_error("{\n  \"spec_version\": 1,\n  oops\n}").rfind("cfg.json:3:", 0), 0u);
    EXPECT_NE(config_error("[1, 2]").find("object"), std::string::npos);
}

TEST(config, instance_sources) {
    InstanceConfig inst;
    EXPECT_EQ(inst.build_hamiltonian().K(), example_hamiltonian_xz(0).K());
    inst.gates = {Gate::x()};
    EXPECT_THROW(inst.build_hamiltonian(), ConfigError);
    inst.hamiltonian = HamiltonianSource::builder;
    EXPECT_NO_THROW(inst.build_hamiltonian());
}

TEST(config, default_grids) {
    const auto c = coarse_grid();
    ASSERT_EQ(c.size(), 12u);
    EXPECT_EQ(c.front(), 0.0);
    EXPECT_EQ(c.back(), 1.0);
    const auto s = steane_grid();
    ASSERT_EQ(s.size(), 12u);
    EXPECT_NEAR(s.front(), 0.05, 1e-15);
    EXPECT_NEAR(s.back(), 0.15, 1e-15);
    EXPECT_EQ(default_sweep("steane").mode, SweepMode::mc);
    EXPECT_EQ(default_sweep("steane").reps, 4000);
}

TEST(crossover, symmetric_interpolation) {
    const Crossover c = crossover({0.4, 0.6}, {0.1, -0.1});
    EXPECT_NEAR(c.p, 0.5, 1e-15);
    EXPECT_EQ(c.lo, 0.4);
    EXPECT_EQ(c.hi, 0.6);
    EXPECT_FALSE(c.ambiguous);
}

TEST(crossover, no_sign_change) {
    EXPECT_THROW(crossover({0.1, 0.2, 0.3}, {0.3, 0.2, 0.1}), NoCrossover);
    try {
        crossover({0.1, 0.2}, {-1, -1});
    } catch (const NoCrossover &e) {
        EXPECT_STREQ(e.what(), "no crossover in range");
    }
}

TEST(crossover, multiple_sign_changes_are_flagged) {
    const Crossover c = crossover({0.0, 0.2, 0.4, 0.6}, {1, -1, -1, 1});
    EXPECT_TRUE(c.ambiguous);
    EXPECT_NEAR(c.p, 0.1, 1e-15);
    ASSERT_EQ(c.all.size(), 2u);
    EXPECT_NEAR(c.all[1], 0.5, 1e-15);
}

TEST(crossover, zero_runs) {
    // An interior zero between opposite signs is the crossing itself.
    EXPECT_NEAR(crossover({0.4, 0.5, 0.6}, {0.1, 0.0, -0.1}).p, 0.5, 1e-15);
    EXPECT_NEAR(crossover({0.3, 0.4, 0.5, 0.6}, {0.1, 0.0, 0.0, -0.1}).p, 0.45, 1e-15);
    // Touching zero without a sign change is not a crossing; edge zeros are ignored.
    EXPECT_THROW(crossover({0.4, 0.5, 0.6}, {0.1, 0.0, 0.1}), NoCrossover);
    EXPECT_THROW(crossover({0.0, 0.5, 1.0}, {0.0, 0.1, 0.0}), NoCrossover);
}

TEST(sweep, repetition3_equal_at_half) {
    SweepConfig cfg = rep3();
    cfg.grid = {0.5};
    const SweepResult r = run_sweep(cfg);
    ASSERT_EQ(r.rows.size(), 2u);
    EXPECT_NEAR(r.rows[0].estimate, r.rows[1].estimate, 1e-6);
}

TEST(sweep, exact_rows_have_degenerate_intervals) {
    for (const SweepRow &row : rep3_coarse().rows) {
        EXPECT_EQ(row.ci_low, row.estimate);
        EXPECT_EQ(row.ci_high, row.estimate);
        EXPECT_EQ(row.reps, 0);
    }
    EXPECT_NEAR(rep3_coarse().rows[0].estimate, 0.4949219914, 1e-9);
}

TEST(sweep, repetition3_crossover_near_half) {
    const Crossover c = crossover(rep3_coarse());
    EXPECT_NEAR(c.p, 0.50, 0.02);
}

TEST(sweep, repetition3_difference_sign_on_the_coarse_grid) {
    const auto &r = rep3_coarse();
    const auto diff = r.difference();
    for (size_t i = 0; i < r.grid.size(); i++) {
        if (r.grid[i] > 0 && r.grid[i] < 0.45) {
            EXPECT_GT(diff[i], 0) << r.grid[i];
        } else if (r.grid[i] > 0.55) {
            EXPECT_LT(diff[i], 0) << r.grid[i];
        }
    }
}

TEST(sweep, repetition3_encoded_rows_match_density_matrix_oracle) {
    // 512x512 density matrix with the majority observable built from scratch.
    const oracle::Vec psi = oracle::vec(encode_state(CssCode::repetition(3), history_state(Circuit::example(0))));
    oracle::Mat zm = oracle::Mat::Zero(8, 8);
    for (unsigned w = 0; w < 8; w++) {
        zm(w, w) = oracle::majority(w, 3) ? -1.0 : 1.0;
    }
    const oracle::Mat xxx = oracle::pauli_string("XXX");
    const oracle::Mat i8 = oracle::Mat::Identity(8, 8);
    oracle::Mat h = oracle::Mat::Zero(512, 512);
    double k = 0;
    for (const auto &[coef, s] : oracle::example_terms(0)) {
        oracle::Mat op = oracle::Mat::Identity(1, 1);
        for (char c : s) {
            op = oracle::kron(op, c == 'I' ? i8 : (c == 'X' ? xxx : zm));
        }
        h += coef * op;
        k += std::abs(coef);
    }
    const auto &r = rep3_coarse();
    for (size_t i : {3u, 9u}) {
        const double p = r.grid[i];
        oracle::Mat rho = psi * psi.adjoint();
        for (int q = 0; q < 9; q++) {
            const oracle::Mat x = oracle::embed(oracle::pauli('X'), 9, q);
            rho = (1 - p) * rho + p * x * rho * x;
        }
        const double acc = 0.5 - (h * rho).trace().real() / (2 * k);
        EXPECT_NEAR(r.rows[2 * i].estimate, acc, 1e-10) << p;
    }
}

TEST(sweep, repetition3_difference_changes_sign_twice) {
    // Majority voting outperforms a single bare qubit again once flips dominate.
    const Crossover c = crossover(rep3_coarse());
    ASSERT_EQ(c.all.size(), 2u);
    EXPECT_TRUE(c.ambiguous);
    EXPECT_NEAR(c.all[1], 0.708, 0.01);
    EXPECT_EQ(rep3_coarse().difference().back(), 0.0);
}

TEST(sweep, exact_and_mc_agree) {
    SweepConfig cfg = rep3(SweepMode::mc);
    cfg.threads = 2;
    const SweepResult mc = run_sweep(cfg);
    const auto &exact = rep3_coarse();
    for (size_t i = 0; i < mc.rows.size(); i++) {
        const SweepRow &m = mc.rows[i];
        const SweepRow &e = exact.rows[i];
        ASSERT_EQ(m.p, e.p);
        ASSERT_EQ(m.variant, e.variant);
        // The per-rep standard deviation is recovered from the interval half width.
        const double sigma = (m.ci_high - m.ci_low) / (2 * 1.96);
        EXPECT_LE(std::abs(m.estimate - e.estimate), 4 * sigma + 1e-12) << m.p;
    }
}

TEST(sweep, protocol_mode_agrees_with_exact) {
    SweepConfig cfg = rep3(SweepMode::protocol);
    cfg.grid = {0.1, 0.3};
    cfg.reps = 20000;
    cfg.threads = 2;
    const SweepResult r = run_sweep(cfg);
    SweepConfig ecfg = rep3();
    ecfg.grid = cfg.grid;
    const SweepResult e = run_sweep(ecfg);
    for (size_t i = 0; i < r.rows.size(); i++) {
        EXPECT_NEAR(r.rows[i].estimate, e.rows[i].estimate, oracle::four_sigma(0.5, 20000)) << r.rows[i].p;
    }
}

TEST(sweep, csv_is_byte_identical_across_runs_and_threads) {
    SweepConfig cfg = rep3(SweepMode::mc);
    cfg.reps = 300;
    cfg.threads = 1;
    const std::string a = to_csv(run_sweep(cfg));
    EXPECT_EQ(a, to_csv(run_sweep(cfg)));
    for (int threads : {2, 4}) {
        cfg.threads = threads;
        EXPECT_EQ(a, to_csv(run_sweep(cfg)));
    }
}

TEST(sweep, point_seeds_are_distinct) {
    std::set<uint64_t> seen;
    for (size_t i = 0; i < 12; i++) {
        seen.insert(point_seed(1, i, Variant::encoded));
        seen.insert(point_seed(1, i, Variant::unencoded));
    }
    EXPECT_EQ(seen.size(), 24u);
}

TEST(output, csv_layout) {
    SweepConfig cfg = rep3();
    cfg.grid = {0.0, 0.5};
    const std::string csv = to_csv(run_sweep(cfg));
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "p,variant,estimate,ci_low,ci_high,reps,seed");
    std::getline(in, line);
    EXPECT_EQ(line.rfind("0,encoded,0.4949219914,0.4949219914,0.4949219914,0,", 0), 0u) << line;
    std::getline(in, line);
    EXPECT_EQ(line.rfind("0,unencoded,", 0), 0u);
    int rows = 0;
    while (std::getline(in, line)) {
        rows++;
    }
    EXPECT_EQ(rows, 2);
}

TEST(output, format_real) {
    EXPECT_EQ(format_real(0.1), "0.1");
    EXPECT_EQ(format_real(-0.0), "0");
    EXPECT_EQ(format_real(1.0 / 3), "0.3333333333");
    EXPECT_EQ(format_real(0.4949219914123), "0.4949219914");
}

TEST(output, svg_and_gnuplot) {
    std::ostringstream svg;
    write_svg(rep3_coarse(), "repetition:3", svg);
    EXPECT_EQ(svg.str().rfind("<svg", 0), 0u);
    EXPECT_NE(svg.str().find("</svg>"), std::string::npos);
    std::ostringstream dat;
    write_gnuplot(rep3_coarse(), dat);
    EXPECT_FALSE(dat.str().empty());
}

TEST(confidence_interval, spec_examples) {
    const Interval a = confidence_interval(0.5, 0.5, 10000);
    EXPECT_NEAR(a.lo, 0.4902, 1e-12);
    EXPECT_NEAR(a.hi, 0.5098, 1e-12);
    EXPECT_EQ(confidence_interval(0.7, 0.3, 1).lo, 0.7);
    EXPECT_EQ(confidence_interval(0.99, 0.0995, 100).hi, 1.0);
}

TEST(selftest, all_goldens_pass) {
    for (const GoldenCheck &c : run_selftest()) {
        EXPECT_TRUE(c.passed) << c.name << " = " << c.value << ", expected " << c.expected;
    }
}
