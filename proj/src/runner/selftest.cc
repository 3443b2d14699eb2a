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

#include "posthoc/runner/selftest.h"

#include <cmath>
#include <numbers>

#include "posthoc/clockham/circuit.h"
#include "posthoc/clockham/xz_hamiltonian.h"
#include "posthoc/csscode/encode.h"
#include "posthoc/ftcalc/ftcalc.h"
#include "posthoc/noise/heisenberg.h"
#include "posthoc/noise/monte_carlo.h"
#include "posthoc/protocol/protocol.h"
#include "posthoc/runner/output.h"
#include "posthoc/runner/sweep.h"

namespace posthoc {

namespace {

void add(std::vector<GoldenCheck> &out, std::string name, double value, double expected, double tol) {
    out.push_back({std::move(name), value, expected, tol, std::abs(value - expected) <= tol});
}

// Within four standard errors of the estimate.
void add_sampled(std::vector<GoldenCheck> &out, std::string name, const NoisyEstimate &e, double expected) {
    const double sigma = e.stddev / std::sqrt(static_cast<double>(e.reps));
    add(out, std::move(name), e.mean, expected, std::max(4 * sigma, 1e-12));
}

}  // namespace

std::vector<GoldenCheck> run_selftest(int threads, uint64_t seed) {
    std::vector<GoldenCheck> out;
    const double s2 = std::pow(std::sin(std::numbers::pi / 8), 2);
    const double c2 = std::pow(std::cos(std::numbers::pi / 8), 2);

    const Circuit circuit = Circuit::example(0);
    const XZHamiltonian h = example_hamiltonian_xz(0);
    const StateVector psi = history_state(circuit);
    const double energy = expectation(psi, PauliSum(h.terms()));
    const double p_acc = acceptance_probability(h, term_expectations(psi, h));
    add(out, "K", h.K(), 4.80656, 1e-5);
    add(out, "history_energy", energy, s2 / 3, 1e-10);
    add(out, "noiseless_acceptance", p_acc, 0.4949, 5e-4);
    add(out, "lambda_min", eigs_dense(h.dense()).front(), 0.0128234, 1e-6);
    add(out, "soundness_bound", soundness_bound(h), 0.498666, 1e-6);
    // Output |1> designates acceptance.
    add(out, "output_accept_probability", std::norm(output_state(circuit)[1]), c2, 1e-10);

    const CssCode rep3 = CssCode::repetition(3);
    const StateVector psi3 = encode_state(rep3, psi);
    const EncodedHamiltonian h3 = encode_hamiltonian(rep3, h, EncodingMode::decoded);
    const HeisenbergEvaluator exact3(psi3, h3);
    const HeisenbergEvaluator bare(psi, encode_hamiltonian(CssCode::none(), h, EncodingMode::decoded));
    double encoded_energy = 0;
    for (const auto &t : encode_hamiltonian(rep3, h, EncodingMode::logical).terms) {
        encoded_energy += t.coefficient * expectation(psi3, t.observable);
    }
    add(out, "rep3_encoded_energy", encoded_energy, energy, 1e-10);
    add(out, "rep3_noiseless_acceptance", exact3.acceptance(PauliChannel::identity()), p_acc, 1e-10);
    add(out, "rep3_equal_at_half", exact3.acceptance(PauliChannel::bitflip(0.5)),
        bare.acceptance(PauliChannel::bitflip(0.5)), 1e-6);

    const PauliChannel flip3 = PauliChannel::bitflip(0.3);
    add_sampled(out, "rep3_mc_bitflip_0.3",
                mc_noisy_acceptance(psi3, h3, flip3, 400, derive_seed(seed, 1), threads), exact3.acceptance(flip3));
    add_sampled(out, "rep3_protocol_honest",
                estimate_acceptance(h, rep3, ProverStrategy::honest(circuit), PauliChannel::identity(), 4000,
                                    derive_seed(seed, 2), threads),
                p_acc);

    SweepConfig cfg = default_sweep("repetition:3");
    cfg.seed = seed;
    cfg.threads = threads;
    add(out, "rep3_crossover", crossover(run_sweep(cfg)).p, 0.5, 0.02);

    add(out, "ft_suppressed_error", suppressed_error(1, 0.1, 2), 1e-4, 1e-18);
    add(out, "ft_required_levels", required_levels(1, 0.3, 1e-6), 4, 0);
    add(out, "ft_steane_register", static_cast<double>(qubit_overhead(7, 1, 3)), 21, 0);
    return out;
}

void write_selftest_csv(const std::vector<GoldenCheck> &checks, std::ostream &out) {
    out << "name,value,expected,tolerance,status\n";
    for (const auto &c : checks) {
        out << c.name << ',' << format_real(c.value) << ',' << format_real(c.expected) << ','
            << format_real(c.tolerance) << ',' << (c.passed ? "pass" : "fail") << '\n';
    }
}

}  // namespace posthoc
