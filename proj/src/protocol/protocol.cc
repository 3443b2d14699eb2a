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

#include "posthoc/protocol/protocol.h"

#include <cmath>
#include <mutex>
#include <stdexcept>

#include "json.hpp"

#include "posthoc/csscode/encode.h"
#include "posthoc/densekit/measure.h"
#include "posthoc/noise/monte_carlo.h"

namespace posthoc {

struct ProverStrategy::Cache {
    std::mutex mutex;
    std::string code_name;
    int num_logical = -1;
    std::optional<StateVector> encoded;
};

ProverStrategy::ProverStrategy(Kind kind, std::optional<Circuit> circuit, std::optional<StateVector> state)
    : kind_(kind), circuit_(std::move(circuit)), state_(std::move(state)), cache_(std::make_shared<Cache>()) {}

ProverStrategy ProverStrategy::honest(Circuit circuit) {
    return ProverStrategy(Kind::honest, std::move(circuit), std::nullopt);
}

ProverStrategy ProverStrategy::fixed_state(StateVector state) {
    return ProverStrategy(Kind::fixed_state, std::nullopt, std::move(state));
}

ProverStrategy ProverStrategy::maximally_random() {
    return ProverStrategy(Kind::maximally_random, std::nullopt, std::nullopt);
}

std::string ProverStrategy::name() const {
    switch (kind_) {
        case Kind::honest:
            return "honest";
        case Kind::fixed_state:
            return "fixed_state";
        case Kind::maximally_random:
            return "maximally_random";
    }
    return "?";
}

StateVector ProverStrategy::prepare(const CssCode &code, int num_logical, Rng &rng) const {
    const int physical = num_logical * code.block_size();
    switch (kind_) {
        case Kind::maximally_random:
            return StateVector::random(physical, rng);
        case Kind::fixed_state:
            if (state_->num_qubits() != physical) {
                throw std::invalid_argument("prover state has " + std::to_string(state_->num_qubits()) +
                                            " qubits, announcement needs " + std::to_string(physical));
            }
            return *state_;
        case Kind::honest: {
            std::lock_guard<std::mutex> lock(cache_->mutex);
            if (!cache_->encoded || cache_->code_name != code.name() || cache_->num_logical != num_logical) {
                StateVector history = history_state(*circuit_);
                if (history.num_qubits() != num_logical) {
                    throw std::invalid_argument("history state does not match the announced Hamiltonian");
                }
                cache_->encoded = encode_state(code, history);
                cache_->code_name = code.name();
                cache_->num_logical = num_logical;
            }
            return *cache_->encoded;
        }
    }
    throw std::logic_error("unknown prover kind");
}

namespace {

int sample_term(const XZHamiltonian &h, Rng &rng) {
    const double u = unit_uniform(rng) * h.K();
    double acc = 0;
    for (size_t i = 0; i < h.size(); i++) {
        acc += std::abs(h.terms()[i].coefficient());
        if (u < acc) {
            return static_cast<int>(i);
        }
    }
    return static_cast<int>(h.size()) - 1;
}

}  // namespace

ProtocolTranscript run_round(const XZHamiltonian &h, const CssCode &code, const ProverStrategy &prover,
                             const PauliChannel &ch, Rng &rng) {
    const int n = h.num_qubits();
    const int m = code.block_size();
    const int physical = n * m;
    if (physical > kMaxEncodedQubits) {
        throw GuardError("encoded register of " + std::to_string(physical) + " qubits exceeds " +
                         std::to_string(kMaxEncodedQubits));
    }

    ProtocolTranscript t;
    t.term_index = sample_term(h, rng);
    const PauliString &term = h.terms()[t.term_index];
    t.term_coefficient = term.coefficient();

    StateVector state = prover.prepare(code, n, rng);
    if (!ch.is_identity()) {
        state = apply_pauli(state, sample_pauli_error(ch, physical, rng));
    }

    std::vector<ObservableFactor> factors;
    factors.reserve(physical);
    for (int j = 0; j < n; j++) {
        for (int q = 0; q < m; q++) {
            factors.push_back(ObservableFactor::pauli(j * m + q, term[j]));
        }
    }
    const ProductMeasurement meas = measure_product(state, ProductObservable(physical, std::move(factors)), rng);
    t.raw_outcomes = meas.outcomes;

    t.product_outcome = 1;
    for (int j = 0; j < n; j++) {
        int decoded = 1;
        if (term[j] != Pauli::I) {
            uint32_t word = 0;
            for (int q = 0; q < m; q++) {
                word = (word << 1) | (meas.outcomes[j * m + q] == -1 ? 1u : 0u);
            }
            const MeasureBasis basis = term[j] == Pauli::X ? MeasureBasis::X : MeasureBasis::Z;
            decoded = decode_outcomes(code, basis, word).logical_bit ? -1 : 1;
        }
        t.decoded_outcomes.push_back(decoded);
        t.product_outcome *= decoded;
    }
    t.accepted = t.product_outcome == (t.term_coefficient > 0 ? -1 : 1);
    return t;
}

NoisyEstimate estimate_acceptance(const XZHamiltonian &h, const CssCode &code, const ProverStrategy &prover,
                                  const PauliChannel &ch, int64_t rounds, uint64_t seed, int threads,
                                  const TranscriptSink &sink) {
    if (rounds < 1) {
        throw std::invalid_argument("rounds must be >= 1");
    }
    std::vector<double> values(rounds);
    std::vector<ProtocolTranscript> log(sink ? rounds : 0);
    parallel_for(rounds, threads, [&](int64_t r) {
        Rng rng(derive_seed(seed, static_cast<uint64_t>(r)));
        ProtocolTranscript t = run_round(h, code, prover, ch, rng);
        t.round = r;
        values[r] = t.accepted ? 1.0 : 0.0;
        if (sink) {
            log[r] = std::move(t);
        }
    });
    for (const auto &t : log) {
        sink(t);
    }
    return summarize(values, seed);
}

double soundness_bound(const XZHamiltonian &h) {
    const std::vector<double> spectrum = eigs_dense(h.dense());
    return 0.5 * (1.0 - spectrum.front() / h.K());
}

std::string transcript_json(const ProtocolTranscript &t) {
    nlohmann::ordered_json j;
    j["round"] = t.round;
    j["term_index"] = t.term_index;
    j["term_coefficient"] = t.term_coefficient;
    j["outcomes"] = t.raw_outcomes;
    j["decoded"] = t.decoded_outcomes;
    j["product_outcome"] = t.product_outcome;
    j["accepted"] = t.accepted;
    return j.dump();
}

}  // namespace posthoc
