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

#include "posthoc/csscode/encode.h"

#include <cmath>

namespace posthoc {

namespace {

std::vector<std::pair<uint32_t, Complex>> support(const StateVector &s) {
    std::vector<std::pair<uint32_t, Complex>> out;
    for (size_t k = 0; k < s.dim(); k++) {
        if (s[k] != Complex{0}) {
            out.emplace_back(static_cast<uint32_t>(k), s[k]);
        }
    }
    return out;
}

}  // namespace

StateVector encode_state(const CssCode &code, const StateVector &logical) {
    const int n = logical.num_qubits();
    const int m = code.block_size();
    if (n * m > kMaxEncodedQubits) {
        throw GuardError("encoded register of " + std::to_string(n * m) + " qubits exceeds " +
                         std::to_string(kMaxEncodedQubits));
    }
    const auto zero = support(code.logical_zero());
    const auto one = support(code.logical_one());
    std::vector<Complex> amps(size_t{1} << (n * m), Complex{0});
    std::vector<std::pair<uint64_t, Complex>> partial, next;
    for (size_t b = 0; b < logical.dim(); b++) {
        if (logical[b] == Complex{0}) {
            continue;
        }
        partial.assign(1, {0, logical[b]});
        for (int j = 0; j < n; j++) {
            const auto &block = ((b >> bit_position(n, j)) & 1) ? one : zero;
            next.clear();
            for (const auto &[idx, amp] : partial) {
                for (const auto &[local, a] : block) {
                    next.emplace_back((idx << m) | local, amp * a);
                }
            }
            partial.swap(next);
        }
        for (const auto &[idx, amp] : partial) {
            amps[idx] += amp;
        }
    }
    return StateVector::unchecked(std::move(amps));
}

double EncodedHamiltonian::K() const {
    double k = 0;
    for (const auto &t : terms) {
        k += std::abs(t.coefficient);
    }
    return k;
}

std::vector<double> EncodedHamiltonian::coefficients() const {
    std::vector<double> out;
    out.reserve(terms.size());
    for (const auto &t : terms) {
        out.push_back(t.coefficient);
    }
    return out;
}

EncodedHamiltonian encode_hamiltonian(const CssCode &code, const XZHamiltonian &h, EncodingMode mode) {
    const int m = code.block_size();
    const int n = h.num_qubits();
    if (n * m > kMaxEncodedQubits) {
        throw GuardError("encoded register of " + std::to_string(n * m) + " qubits exceeds " +
                         std::to_string(kMaxEncodedQubits));
    }
    const DecodeObservable decode_z = decode_observable(code, MeasureBasis::Z);
    const DecodeObservable decode_x = decode_observable(code, MeasureBasis::X);

    EncodedHamiltonian out{n, m, {}};
    for (const auto &term : h.terms()) {
        std::vector<ObservableFactor> factors;
        for (int j = 0; j < n; j++) {
            const Pauli site = term[j];
            const int first = j * m;
            const MeasureBasis basis = site == Pauli::X ? MeasureBasis::X : MeasureBasis::Z;
            if (site != Pauli::I && mode == EncodingMode::decoded && code.corrects(basis)) {
                factors.push_back((basis == MeasureBasis::X ? decode_x : decode_z).factor(first));
                continue;
            }
            for (int q = 0; q < m; q++) {
                factors.push_back(ObservableFactor::pauli(first + q, site));
            }
        }
        out.terms.push_back({term.coefficient(), term.with_coefficient(1.0), ProductObservable(n * m, std::move(factors))});
    }
    return out;
}

std::vector<double> term_expectations(const StateVector &state, const EncodedHamiltonian &h) {
    std::vector<double> out;
    out.reserve(h.terms.size());
    for (const auto &t : h.terms) {
        out.push_back(expectation(state, t.observable));
    }
    return out;
}

}  // namespace posthoc
