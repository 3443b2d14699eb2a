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

// Command-line front end: ham, state, protocol, sweep, ftcalc and selftest.
// Exit status 0 on success, 1 for usage or configuration errors, 2 when a numerical
// guard trips (register too large, above-threshold input, failed golden value).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "posthoc/clockham/builder.h"
#include "posthoc/clockham/serialize.h"
#include "posthoc/csscode/encode.h"
#include "posthoc/ftcalc/ftcalc.h"
#include "posthoc/protocol/protocol.h"
#include "posthoc/runner/output.h"
#include "posthoc/runner/selftest.h"
#include "posthoc/runner/sweep.h"

namespace {

using namespace posthoc;
using ordered_json = nlohmann::ordered_json;

struct InstanceFlags {
    std::string config;
    int input_bit = 0;
    bool builder = false;
    bool claim_reject = false;
};

void add_instance_flags(CLI::App *cmd, InstanceFlags &f) {
    cmd->add_option("--config", f.config, "Sweep config whose instance block is used");
    cmd->add_option("--input-bit", f.input_bit, "Input bit x of the example circuit")->check(CLI::Range(0, 1));
    cmd->add_flag("--builder", f.builder, "Announce the clock-construction Hamiltonian");
    cmd->add_flag("--claim-reject", f.claim_reject, "Claim the computation rejects");
}

InstanceConfig instance_from(const InstanceFlags &f) {
    InstanceConfig inst;
    if (!f.config.empty()) {
        inst = load_sweep_config(f.config).instance;
    } else {
        inst.input_bit = f.input_bit;
    }
    if (f.builder) {
        inst.hamiltonian = HamiltonianSource::builder;
    }
    if (f.claim_reject) {
        inst.claimed_accept = false;
    }
    return inst;
}

// Opens `path` for writing; "-" or empty means stdout.
std::ostream &open_out(const std::string &path, std::unique_ptr<std::ofstream> &holder) {
    if (path.empty() || path == "-") {
        return std::cout;
    }
    holder = std::make_unique<std::ofstream>(path);
    if (!*holder) {
        throw ConfigError(path + ": cannot open for writing");
    }
    return *holder;
}

std::string complex_str(Complex z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g%+.10gi", z.real(), z.imag());
    return buf;
}

std::vector<double> parse_grid(const std::string &text) {
    // "lo:hi:count" or a comma-separated list.
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    const char sep = text.find(':') != std::string::npos ? ':' : ',';
    while (std::getline(ss, item, sep)) {
        parts.push_back(item);
    }
    try {
        if (sep == ':') {
            if (parts.size() != 3) {
                throw ConfigError("--grid: expected lo:hi:count");
            }
            return equispaced_grid(std::stod(parts[0]), std::stod(parts[1]), std::stoi(parts[2]));
        }
        std::vector<double> g;
        for (const auto &p : parts) {
            g.push_back(std::stod(p));
        }
        return g;
    } catch (const std::logic_error &) {
        throw ConfigError("--grid: cannot parse '" + text + "'");
    }
}

int cmd_ham(const InstanceFlags &f, const std::string &code_spec, const std::string &format) {
    const XZHamiltonian h = instance_from(f).build_hamiltonian();
    if (format == "json") {
        std::cout << to_text(h);
        return 0;
    }
    const auto spectrum = eigs_dense(h.dense());
    std::printf("%-8s %14s\n", "term", "coefficient");
    for (const auto &t : h.terms()) {
        std::printf("%-8s %14.10g\n", t.str().c_str(), t.coefficient());
    }
    std::printf("K %.10g\nlambda_min %.10g\n", h.K(), spectrum.front());
    if (!code_spec.empty()) {
        const CssCode code = CssCode::parse(code_spec);
        const EncodedHamiltonian enc = encode_hamiltonian(code, h, EncodingMode::decoded);
        std::printf("encoded %s: %d physical qubits, %zu terms\n", code.name().c_str(), enc.num_physical(),
                    enc.terms.size());
    }
    return 0;
}

int cmd_state(const InstanceFlags &f, const std::string &code_spec) {
    const InstanceConfig inst = instance_from(f);
    StateVector psi = history_state(inst.circuit());
    if (!code_spec.empty()) {
        psi = encode_state(CssCode::parse(code_spec), psi);
    }
    std::printf("# %d qubits, nonzero amplitudes\n", psi.num_qubits());
    for (size_t b = 0; b < psi.dim(); b++) {
        if (std::abs(psi[b]) > 1e-14) {
            std::string bits;
            for (int q = 0; q < psi.num_qubits(); q++) {
                bits += ((b >> bit_position(psi.num_qubits(), q)) & 1) ? '1' : '0';
            }
            std::printf("%s %s\n", bits.c_str(), complex_str(psi[b]).c_str());
        }
    }
    return 0;
}

struct ProtocolFlags {
    std::string code = "none";
    std::string channel = "none";
    std::string prover = "honest";
    std::string transcript;
    int64_t rounds = 10000;
    uint64_t seed = 1;
    int threads = 1;
};

int cmd_protocol(const InstanceFlags &f, const ProtocolFlags &pf) {
    const InstanceConfig inst = instance_from(f);
    const XZHamiltonian h = inst.build_hamiltonian();
    const CssCode code = CssCode::parse(pf.code);
    const PauliChannel ch = PauliChannel::parse(pf.channel);
    std::optional<ProverStrategy> prover;
    if (pf.prover == "honest") {
        prover = ProverStrategy::honest(inst.circuit());
    } else if (pf.prover == "random") {
        prover = ProverStrategy::maximally_random();
    } else if (pf.prover == "history:0" || pf.prover == "history:1") {
        InstanceConfig other = inst;
        other.input_bit = pf.prover.back() - '0';
        prover = ProverStrategy::fixed_state(encode_state(code, history_state(other.circuit())));
    } else {
        throw ConfigError("--prover: expected honest, random, history:0 or history:1");
    }

    std::unique_ptr<std::ofstream> holder;
    TranscriptSink sink;
    if (!pf.transcript.empty()) {
        std::ostream &log = open_out(pf.transcript, holder);
        sink = [&log](const ProtocolTranscript &t) { log << transcript_json(t) << '\n'; };
    }
    const NoisyEstimate e = estimate_acceptance(h, code, *prover, ch, pf.rounds, pf.seed, pf.threads, sink);
    ordered_json j;
    j["prover"] = prover->name();
    j["code"] = code.name();
    j["channel"] = ch.str();
    j["rounds"] = e.reps;
    j["seed"] = e.seed;
    j["acceptance"] = e.mean;
    j["ci_low"] = e.ci_low;
    j["ci_high"] = e.ci_high;
    if (h.num_qubits() <= 12) {
        j["soundness_bound"] = soundness_bound(h);
    }
    (pf.transcript == "-" ? std::cerr : std::cout) << j.dump(2) << '\n';
    return 0;
}

struct SweepFlags {
    std::string out;
    std::string dat;
    std::string svg;
    std::string code;
    std::string channel;
    std::string mode;
    std::string grid;
    std::optional<int64_t> reps;
    std::optional<uint64_t> seed;
    std::optional<int> threads;
};

int cmd_sweep(const InstanceFlags &f, const SweepFlags &sf) {
    SweepConfig cfg;
    if (!f.config.empty()) {
        cfg = load_sweep_config(f.config);
    } else {
        cfg = default_sweep(sf.code.empty() ? "repetition:3" : sf.code);
        cfg.instance = instance_from(f);
    }
    if (!sf.code.empty()) {
        cfg.code = sf.code;
    }
    if (!sf.channel.empty()) {
        if (sf.channel.find(':') != std::string::npos) {
            throw ConfigError("--channel: a sweep takes a family (bitflip or depolarizing); p comes from the grid");
        }
        cfg.channel = parse_channel_family(sf.channel);
    }
    if (!sf.mode.empty()) {
        cfg.mode = parse_sweep_mode(sf.mode);
    }
    if (!sf.grid.empty()) {
        cfg.grid = parse_grid(sf.grid);
    }
    if (sf.reps) {
        cfg.reps = *sf.reps;
    }
    if (sf.seed) {
        cfg.seed = *sf.seed;
    }
    if (sf.threads) {
        cfg.threads = *sf.threads;
    }
    const SweepResult result = run_sweep(cfg);
    std::unique_ptr<std::ofstream> holder;
    write_csv(result, open_out(sf.out, holder));
    if (!sf.dat.empty()) {
        std::unique_ptr<std::ofstream> dat;
        write_gnuplot(result, open_out(sf.dat, dat));
    }
    if (!sf.svg.empty()) {
        std::unique_ptr<std::ofstream> svg;
        write_svg(result, cfg.code + ", " + std::string(channel_family_name(cfg.channel)) + " noise",
                  open_out(sf.svg, svg));
    }
    try {
        const Crossover c = crossover(result);
        std::fprintf(stderr, "crossover p* = %.6f in [%.6f, %.6f]%s\n", c.p, c.lo, c.hi,
                     c.ambiguous ? " (several sign changes)" : "");
        for (size_t i = 1; i < c.all.size(); i++) {
            std::fprintf(stderr, "  further crossing at %.6f\n", c.all[i]);
        }
    } catch (const NoCrossover &e) {
        std::fprintf(stderr, "%s\n", e.what());
    }
    return 0;
}

struct FtFlags {
    double alpha = 1.0;
    double eps = 0.01;
    double eta = 0.01;
    int block_size = 7;
    int64_t n = 3;
    double measurements = 2.0;
    std::optional<double> p_acc;
    std::optional<double> p_rej;
};

int cmd_ftcalc(const FtFlags &f) {
    const int k = required_levels(f.alpha, f.eps, f.eta, f.measurements);
    ordered_json j;
    j["alpha"] = f.alpha;
    j["eps_m"] = f.eps;
    j["eta"] = f.eta;
    j["levels"] = k;
    j["suppressed_error"] = suppressed_error(f.alpha, f.eps, k);
    j["target"] = f.eta / f.measurements;
    j["physical_qubits"] = qubit_overhead(f.block_size, k, f.n);
    if (f.alpha * f.eta < 2.0) {
        const OverheadCheck c = overhead_identity_check(f.alpha, f.eps, f.eta, f.block_size, k);
        j["overhead_asymptotic"] = c.asymptotic;
        j["overhead_relative_error"] = c.relative_error;
    }
    if (f.p_acc && f.p_rej) {
        const GapShift g = gap_shift(*f.p_acc, *f.p_rej, f.eta);
        j["shifted_acc"] = g.shifted_acc;
        j["shifted_rej"] = g.shifted_rej;
        j["gap_maintained"] = g.gap_maintained;
    }
    std::cout << j.dump(2) << '\n';
    return 0;
}

int cmd_selftest(int threads, uint64_t seed, const std::string &out) {
    const auto checks = run_selftest(threads, seed);
    std::unique_ptr<std::ofstream> holder;
    write_selftest_csv(checks, open_out(out, holder));
    int failed = 0;
    for (const auto &c : checks) {
        failed += !c.passed;
    }
    if (failed) {
        std::fprintf(stderr, "%d golden check(s) failed\n", failed);
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Simulator for post hoc verification of quantum computation with encoded proofs"};
    app.require_subcommand(1);

    InstanceFlags inst;
    std::string code_spec;
    std::string format = "table";
    auto *ham = app.add_subcommand("ham", "Print the announced Hamiltonian");
    add_instance_flags(ham, inst);
    ham->add_option("--code", code_spec, "Also report the encoded size for this code");
    ham->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));

    auto *state = app.add_subcommand("state", "Print the (encoded) history state");
    add_instance_flags(state, inst);
    state->add_option("--code", code_spec, "none, repetition:<m> or steane");

    ProtocolFlags pf;
    auto *protocol = app.add_subcommand("protocol", "Run verifier rounds against a prover");
    add_instance_flags(protocol, inst);
    protocol->add_option("--code", pf.code, "none, repetition:<m> or steane");
    protocol->add_option("--channel", pf.channel, "none, bitflip:<p> or depolarizing:<p>");
    protocol->add_option("--prover", pf.prover, "honest, random, history:0 or history:1");
    protocol->add_option("--rounds,--reps", pf.rounds, "Number of rounds")->check(CLI::PositiveNumber);
    protocol->add_option("--seed", pf.seed, "Master seed");
    protocol->add_option("--threads", pf.threads, "Worker threads")->check(CLI::PositiveNumber);
    protocol->add_option("--transcript", pf.transcript, "Write one JSON line per round here ('-' for stdout)");

    SweepFlags sf;
    auto *sweep = app.add_subcommand("sweep", "Noise sweep of encoded and unencoded acceptance");
    add_instance_flags(sweep, inst);
    sweep->add_option("--out", sf.out, "CSV output (default stdout)");
    sweep->add_option("--dat", sf.dat, "gnuplot data file");
    sweep->add_option("--svg", sf.svg, "SVG plot");
    sweep->add_option("--code", sf.code, "none, repetition:<m> or steane");
    sweep->add_option("--channel", sf.channel, "bitflip or depolarizing");
    sweep->add_option("--mode", sf.mode, "exact, mc or protocol");
    sweep->add_option("--grid", sf.grid, "lo:hi:count or comma-separated p values");
    sweep->add_option("--reps", sf.reps, "Repetitions per point");
    sweep->add_option("--seed", sf.seed, "Master seed");
    sweep->add_option("--threads", sf.threads, "Worker threads");

    FtFlags ff;
    auto *ft = app.add_subcommand("ftcalc", "Concatenation depth, qubit overhead and gap shift");
    ft->add_option("--alpha", ff.alpha, "Code constant alpha");
    ft->add_option("--eps", ff.eps, "Per-measurement error")->required();
    ft->add_option("--eta", ff.eta, "Target total error")->required();
    ft->add_option("--block-size", ff.block_size, "Physical qubits per block");
    ft->add_option("--n", ff.n, "Logical qubits");
    ft->add_option("--measurements", ff.measurements, "Logical measurements per round");
    ft->add_option("--p-acc", ff.p_acc, "Acceptance probability to shift");
    ft->add_option("--p-rej", ff.p_rej, "Rejection-side acceptance to shift");

    int st_threads = 1;
    uint64_t st_seed = 2024;
    std::string st_out;
    auto *selftest = app.add_subcommand("selftest", "Golden-value suite");
    selftest->add_option("--threads", st_threads, "Worker threads")->check(CLI::PositiveNumber);
    selftest->add_option("--seed", st_seed, "Master seed");
    selftest->add_option("--out", st_out, "CSV report (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*ham) {
            return cmd_ham(inst, code_spec, format);
        }
        if (*state) {
            return cmd_state(inst, code_spec);
        }
        if (*protocol) {
            return cmd_protocol(inst, pf);
        }
        if (*sweep) {
            return cmd_sweep(inst, sf);
        }
        if (*ft) {
            return cmd_ftcalc(ff);
        }
        if (*selftest) {
            return cmd_selftest(st_threads, st_seed, st_out);
        }
    } catch (const ConfigError &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::invalid_argument &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const GuardError &e) {
        std::fprintf(stderr, "guard: %s\n", e.what());
        return 2;
    } catch (const std::exception &e) {
        std::fprintf(stderr, "numerical error: %s\n", e.what());
        return 2;
    }
    return 1;
}
