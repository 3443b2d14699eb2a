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

#include "posthoc/densekit/measure.h"

#include <cmath>

namespace posthoc {

ProductMeasurement measure_product(const StateVector &state, const ProductObservable &obs, Rng &rng) {
    if (obs.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument("observable dimension does not match the state");
    }
    const int n = state.num_qubits();
    std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());

    // Factors act on disjoint qubits, so all basis rotations can be applied up front.
    for (const auto &f : obs.factors()) {
        if (f.is_identity()) {
            continue;
        }
        for (int q = f.first_qubit(); q < f.first_qubit() + f.num_qubits(); q++) {
            kernels::rotate_to_basis(amps, n, q, f.basis());
        }
    }

    std::vector<int> outcomes;
    outcomes.reserve(obs.factors().size());
    for (const auto &f : obs.factors()) {
        if (f.is_identity()) {
            outcomes.push_back(1);
            continue;
        }
        const int shift = n - f.first_qubit() - f.num_qubits();
        const uint32_t mask = (uint32_t{1} << f.num_qubits()) - 1;
        double plus = 0;
        double total = 0;
        for (size_t b = 0; b < amps.size(); b++) {
            double p = std::norm(amps[b]);
            total += p;
            if (f.sign(static_cast<uint32_t>(b >> shift) & mask) == 1) {
                plus += p;
            }
        }
        const int outcome = unit_uniform(rng) * total < plus ? 1 : -1;
        const double kept = outcome == 1 ? plus : total - plus;
        const double scale = 1.0 / std::sqrt(kept);
        for (size_t b = 0; b < amps.size(); b++) {
            if (f.sign(static_cast<uint32_t>(b >> shift) & mask) == outcome) {
                amps[b] *= scale;
            } else {
                amps[b] = 0;
            }
        }
        outcomes.push_back(outcome);
    }

    for (const auto &f : obs.factors()) {
        if (f.is_identity()) {
            continue;
        }
        for (int q = f.first_qubit(); q < f.first_qubit() + f.num_qubits(); q++) {
            kernels::rotate_to_basis(amps, n, q, f.basis(), true);
        }
    }
    return {std::move(outcomes), StateVector::unchecked(std::move(amps))};
}

}  // namespace posthoc
