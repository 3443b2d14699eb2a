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

#include "posthoc/runner/sweep.h"

#include <cmath>

#include "posthoc/csscode/encode.h"
#include "posthoc/noise/heisenberg.h"
#include "posthoc/noise/monte_carlo.h"
#include "posthoc/protocol/protocol.h"

namespace posthoc {

std::string_view variant_name(Variant v) {
    return v == Variant::encoded ? "encoded" : "unencoded";
}

std::vector<double> SweepResult::estimates(Variant v) const {
    std::vector<double> out;
    for (const auto &r : rows) {
        if (r.variant == v) {
            out.push_back(r.estimate);
        }
    }
    return out;
}

std::vector<double> SweepResult::difference() const {
    const auto enc = estimates(Variant::encoded);
    const auto unenc = estimates(Variant::unencoded);
    if (enc.size() != unenc.size()) {
        throw std::logic_error("sweep rows are not paired");
    }
    std::vector<double> d(enc.size());
    for (size_t i = 0; i < d.size(); i++) {
        d[i] = enc[i] - unenc[i];
    }
    return d;
}

uint64_t point_seed(uint64_t seed, size_t index, Variant variant) {
    return derive_seed(seed, 2 * index + (variant == Variant::unencoded ? 1 : 0));
}

SweepResult run_sweep(const SweepConfig &cfg) {
    validate(cfg);
    const Circuit circuit = cfg.instance.circuit();
    const XZHamiltonian h = cfg.instance.build_hamiltonian();
    const CssCode code = CssCode::parse(cfg.code);
    const StateVector history = history_state(circuit);

    const HeisenbergEvaluator bare(history, encode_hamiltonian(CssCode::none(), h, EncodingMode::decoded));

    const EncodedHamiltonian encoded_h = encode_hamiltonian(code, h, EncodingMode::decoded);
    std::optional<StateVector> encoded_state;
    std::optional<HeisenbergEvaluator> exact;
    if (cfg.mode != SweepMode::protocol) {
        encoded_state = encode_state(code, history);
    }
    if (cfg.mode == SweepMode::exact) {
        exact.emplace(*encoded_state, encoded_h);
    }
    const ProverStrategy honest = ProverStrategy::honest(circuit);

    SweepResult result;
    result.grid = cfg.grid;
    for (size_t i = 0; i < cfg.grid.size(); i++) {
        const double p = cfg.grid[i];
        const PauliChannel ch = PauliChannel::make(cfg.channel, p);
        const uint64_t enc_seed = point_seed(cfg.seed, i, Variant::encoded);
        SweepRow enc{p, Variant::encoded, 0, 0, 0, 0, enc_seed};
        if (cfg.mode == SweepMode::exact) {
            enc.estimate = enc.ci_low = enc.ci_high = exact->acceptance(ch);
        } else {
            const NoisyEstimate e =
                cfg.mode == SweepMode::mc
                    ? mc_noisy_acceptance(*encoded_state, encoded_h, ch, cfg.reps, enc_seed, cfg.threads)
                    : estimate_acceptance(h, code, honest, ch, cfg.reps, enc_seed, cfg.threads);
            enc.estimate = e.mean;
            enc.ci_low = e.ci_low;
            enc.ci_high = e.ci_high;
            enc.reps = e.reps;
        }
        result.rows.push_back(enc);
        const double bare_value = bare.acceptance(ch);
        result.rows.push_back(
            {p, Variant::unencoded, bare_value, bare_value, bare_value, 0, point_seed(cfg.seed, i, Variant::unencoded)});
    }
    return result;
}

Crossover crossover(const std::vector<double> &grid, const std::vector<double> &difference) {
    if (grid.size() != difference.size()) {
        throw std::invalid_argument("grid and difference curve differ in length");
    }
    std::vector<int> sign(grid.size());
    for (size_t i = 0; i < grid.size(); i++) {
        sign[i] = std::abs(difference[i]) <= kCrossoverZero ? 0 : (difference[i] > 0 ? 1 : -1);
    }
    Crossover out{0, 0, 0, false, {}};
    bool found = false;
    size_t prev = grid.size();  // last index with a nonzero sign
    for (size_t i = 0; i < grid.size(); i++) {
        if (sign[i] == 0) {
            continue;
        }
        if (prev != grid.size() && sign[prev] != sign[i]) {
            double p;
            if (i == prev + 1) {
                const double t = difference[prev] / (difference[prev] - difference[i]);
                p = grid[prev] + t * (grid[i] - grid[prev]);
            } else {
                p = 0.5 * (grid[prev + 1] + grid[i - 1]);
            }
            if (!found) {
                out.p = p;
                out.lo = grid[prev];
                out.hi = grid[i];
                found = true;
            }
            out.all.push_back(p);
        }
        prev = i;
    }
    if (!found) {
        throw NoCrossover("no crossover in range");
    }
    out.ambiguous = out.all.size() > 1;
    return out;
}

Crossover crossover(const SweepResult &result) {
    return crossover(result.grid, result.difference());
}

}  // namespace posthoc
