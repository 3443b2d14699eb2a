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

#include "posthoc/noise/heisenberg.h"

#include <bit>
#include <cmath>

#include "posthoc/clockham/xz_hamiltonian.h"

namespace posthoc {

namespace {

double string_expectation(const StateVector &s, const PauliString &p) {
    return detail::real_part_checked(
        kernels::pauli_expectation_masks(s.amplitudes(), p.x_mask(), p.z_mask(), p.y_weight()));
}

/// Same sum as the dense kernel restricted to nonzero amplitudes; encoded states are sparse.
double sparse_expectation(std::span<const Complex> amps, const std::vector<uint64_t> &support,
                          const PauliString &p) {
    const uint64_t x = p.x_mask();
    const uint64_t z = p.z_mask();
    Complex total{0};
    for (uint64_t b : support) {
        const double sign = (std::popcount(b & z) & 1) ? -1.0 : 1.0;
        total += std::conj(amps[b ^ x]) * amps[b] * sign;
    }
    return detail::real_part_checked(total * kernels::i_power(p.y_weight()));
}

}  // namespace

double exact_noisy_expectation(const StateVector &s, const PauliSum &obs, const PauliChannel &ch) {
    if (obs.size() > kMaxExpansionStrings) {
        throw GuardError("observable expansion has " + std::to_string(obs.size()) + " strings, limit " +
                         std::to_string(kMaxExpansionStrings));
    }
    double total = 0;
    for (const auto &p : obs) {
        if (p.num_qubits() != s.num_qubits()) {
            throw std::invalid_argument("observable dimension does not match the state");
        }
        const double f = dual_factor(ch, p);
        if (f != 0.0) {
            total += p.coefficient() * f * string_expectation(s, p);
        }
    }
    return total;
}

HeisenbergEvaluator::HeisenbergEvaluator(const StateVector &state, const EncodedHamiltonian &h,
                                         size_t max_strings) {
    if (state.num_qubits() != h.num_physical()) {
        throw std::invalid_argument("state does not match the encoded register");
    }
    coefficients_ = h.coefficients();
    const auto amps = state.amplitudes();
    std::vector<uint64_t> support;
    for (uint64_t b = 0; b < amps.size(); b++) {
        if (amps[b] != Complex{0}) {
            support.push_back(b);
        }
    }
    for (const auto &t : h.terms) {
        const size_t budget = max_strings >= num_strings_ ? max_strings - num_strings_ : 0;
        PauliSum strings = pauli_expansion(t.observable, budget);
        num_strings_ += strings.size();
        std::vector<Entry> entries;
        entries.reserve(strings.size());
        for (const auto &p : strings) {
            entries.push_back({p.coefficient() * sparse_expectation(amps, support, p), p.x_weight(), p.y_weight(),
                               p.z_weight()});
        }
        terms_.push_back(std::move(entries));
    }
}

std::vector<double> HeisenbergEvaluator::term_expectations(const PauliChannel &ch) const {
    const double fx = dual_factor(ch, Pauli::X);
    const double fy = dual_factor(ch, Pauli::Y);
    const double fz = dual_factor(ch, Pauli::Z);
    std::vector<double> out;
    out.reserve(terms_.size());
    for (const auto &entries : terms_) {
        double v = 0;
        for (const auto &e : entries) {
            v += e.weight * std::pow(fx, e.nx) * std::pow(fy, e.ny) * std::pow(fz, e.nz);
        }
        out.push_back(v);
    }
    return out;
}

double HeisenbergEvaluator::acceptance(const PauliChannel &ch) const {
    return acceptance_probability(coefficients_, term_expectations(ch));
}

}  // namespace posthoc
