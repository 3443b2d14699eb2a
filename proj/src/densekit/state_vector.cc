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

#include "posthoc/densekit/state_vector.h"

#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>

namespace posthoc {

Matrix2 gates::hadamard() {
    const double r = 1.0 / std::sqrt(2.0);
    return {Complex{r}, Complex{r}, Complex{r}, Complex{-r}};
}

Matrix2 gates::rotation(double phi) {
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    return {Complex{c}, Complex{s}, Complex{s}, Complex{-c}};
}

namespace {

int qubits_for_length(size_t n) {
    if (n < 2 || (n & (n - 1)) != 0) {
        throw std::invalid_argument("amplitude count must be a power of two >= 2, got " + std::to_string(n));
    }
    return std::countr_zero(n);
}

double squared_norm(std::span<const Complex> amps) {
    double total = 0;
    for (const auto &a : amps) {
        total += std::norm(a);
    }
    return total;
}

}  // namespace

StateVector::StateVector(int num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
}

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > 30) {
        throw std::invalid_argument("num_qubits out of range: " + std::to_string(num_qubits));
    }
    amps_.assign(size_t{1} << num_qubits, Complex{0});
    amps_[0] = 1;
}

StateVector StateVector::basis(int num_qubits, uint64_t index) {
    StateVector s(num_qubits);
    if (index >= s.dim()) {
        throw std::out_of_range("basis index out of range");
    }
    s.amps_[0] = 0;
    s.amps_[index] = 1;
    return s;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
    int n = qubits_for_length(amplitudes.size());
    double nrm = squared_norm(amplitudes);
    if (std::abs(nrm - 1.0) > 1e-10) {
        throw std::invalid_argument("state is not unit norm (|psi|^2 = " + std::to_string(nrm) + ")");
    }
    return StateVector(n, std::move(amplitudes));
}

StateVector StateVector::unchecked(std::vector<Complex> amplitudes) {
    int n = qubits_for_length(amplitudes.size());
    return StateVector(n, std::move(amplitudes));
}

StateVector StateVector::random(int num_qubits, Rng &rng) {
    // Box-Muller over unit_uniform keeps the stream identical across standard libraries.
    std::vector<Complex> amps(size_t{1} << num_qubits);
    for (auto &a : amps) {
        double u = 1.0 - unit_uniform(rng);
        double v = unit_uniform(rng);
        a = std::polar(std::sqrt(-2.0 * std::log(u)), 2.0 * std::numbers::pi * v);
    }
    return StateVector(num_qubits, std::move(amps)).normalized();
}

double StateVector::norm() const {
    return std::sqrt(squared_norm(amps_));
}

StateVector StateVector::normalized() const {
    double n = norm();
    if (n == 0) {
        throw std::domain_error("cannot normalise the zero vector");
    }
    std::vector<Complex> out(amps_);
    for (auto &a : out) {
        a /= n;
    }
    return StateVector(num_qubits_, std::move(out));
}

Complex StateVector::inner(const StateVector &other) const {
    if (other.dim() != dim()) {
        throw std::invalid_argument("inner product dimension mismatch");
    }
    Complex total{0};
    for (size_t k = 0; k < amps_.size(); k++) {
        total += std::conj(amps_[k]) * other.amps_[k];
    }
    return total;
}

StateVector apply_single_qubit(const StateVector &state, int qubit, const Matrix2 &op) {
    if (qubit < 0 || qubit >= state.num_qubits()) {
        throw std::out_of_range("qubit index " + std::to_string(qubit) + " out of range");
    }
    std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
    kernels::apply_1q(amps, state.num_qubits(), qubit, op);
    return StateVector::unchecked(std::move(amps));
}

StateVector tensor(const StateVector &a, const StateVector &b) {
    std::vector<Complex> out(a.dim() * b.dim());
    for (size_t i = 0; i < a.dim(); i++) {
        for (size_t j = 0; j < b.dim(); j++) {
            out[i * b.dim() + j] = a[i] * b[j];
        }
    }
    return StateVector::unchecked(std::move(out));
}

namespace kernels {

void apply_1q(std::span<Complex> amps, int num_qubits, int qubit, const Matrix2 &op) {
    const size_t stride = size_t{1} << bit_position(num_qubits, qubit);
    const size_t n = amps.size();
    for (size_t base = 0; base < n; base += 2 * stride) {
        for (size_t k = base; k < base + stride; k++) {
            Complex a0 = amps[k];
            Complex a1 = amps[k + stride];
            amps[k] = op[0] * a0 + op[1] * a1;
            amps[k + stride] = op[2] * a0 + op[3] * a1;
        }
    }
}

Complex i_power(int k) {
    switch (k & 3) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

// With P = i^{nY} X^x Z^z: P|b> = i^{nY} (-1)^{|b & z|} |b ^ x>.
void apply_pauli_masks(std::span<Complex> amps, uint64_t x_mask, uint64_t z_mask, int num_y) {
    const Complex phase = i_power(num_y);
    const size_t n = amps.size();
    if (x_mask == 0) {
        for (size_t b = 0; b < n; b++) {
            double sign = (std::popcount(b & z_mask) & 1) ? -1.0 : 1.0;
            amps[b] *= phase * sign;
        }
        return;
    }
    for (size_t b = 0; b < n; b++) {
        size_t t = b ^ x_mask;
        if (t < b) {
            continue;
        }
        double sb = (std::popcount(b & z_mask) & 1) ? -1.0 : 1.0;
        double st = (std::popcount(t & z_mask) & 1) ? -1.0 : 1.0;
        Complex ab = amps[b];
        Complex at = amps[t];
        amps[t] = phase * sb * ab;
        amps[b] = phase * st * at;
    }
}

Complex pauli_expectation_masks(std::span<const Complex> amps, uint64_t x_mask, uint64_t z_mask, int num_y) {
    Complex total{0};
    const size_t n = amps.size();
    for (size_t b = 0; b < n; b++) {
        double sign = (std::popcount(b & z_mask) & 1) ? -1.0 : 1.0;
        total += std::conj(amps[b ^ x_mask]) * amps[b] * sign;
    }
    return total * i_power(num_y);
}

}  // namespace kernels

}  // namespace posthoc
