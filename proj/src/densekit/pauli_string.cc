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

#include "posthoc/densekit/pauli_string.h"

#include <algorithm>
#include <cmath>

namespace posthoc {

char pauli_char(Pauli p) {
    return "IXYZ"[static_cast<int>(p)];
}

Pauli pauli_from_char(char c) {
    switch (c) {
        case 'I':
        case '_':
            return Pauli::I;
        case 'X':
            return Pauli::X;
        case 'Y':
            return Pauli::Y;
        case 'Z':
            return Pauli::Z;
        default:
            throw std::invalid_argument(std::string("not a Pauli label: '") + c + "'");
    }
}

const Matrix2 &pauli_matrix(Pauli p) {
    switch (p) {
        case Pauli::I:
            return gates::I;
        case Pauli::X:
            return gates::X;
        case Pauli::Y:
            return gates::Y;
        default:
            return gates::Z;
    }
}

PauliString::PauliString(std::vector<Pauli> sites, double coefficient)
    : sites_(std::move(sites)), coefficient_(coefficient) {
    if (sites_.size() > 64) {
        throw std::invalid_argument("Pauli strings are limited to 64 sites");
    }
}

PauliString PauliString::identity(int num_qubits, double coefficient) {
    return PauliString(std::vector<Pauli>(num_qubits, Pauli::I), coefficient);
}

PauliString PauliString::from_str(std::string_view text, double coefficient) {
    std::vector<Pauli> sites;
    sites.reserve(text.size());
    for (char c : text) {
        sites.push_back(pauli_from_char(c));
    }
    return PauliString(std::move(sites), coefficient);
}

int PauliString::x_weight() const {
    return static_cast<int>(std::count(sites_.begin(), sites_.end(), Pauli::X));
}
int PauliString::z_weight() const {
    return static_cast<int>(std::count(sites_.begin(), sites_.end(), Pauli::Z));
}
int PauliString::y_weight() const {
    return static_cast<int>(std::count(sites_.begin(), sites_.end(), Pauli::Y));
}
int PauliString::weight() const {
    return num_qubits() - static_cast<int>(std::count(sites_.begin(), sites_.end(), Pauli::I));
}

uint64_t PauliString::x_mask() const {
    uint64_t m = 0;
    for (int q = 0; q < num_qubits(); q++) {
        if (sites_[q] == Pauli::X || sites_[q] == Pauli::Y) {
            m |= uint64_t{1} << bit_position(num_qubits(), q);
        }
    }
    return m;
}

uint64_t PauliString::z_mask() const {
    uint64_t m = 0;
    for (int q = 0; q < num_qubits(); q++) {
        if (sites_[q] == Pauli::Z || sites_[q] == Pauli::Y) {
            m |= uint64_t{1} << bit_position(num_qubits(), q);
        }
    }
    return m;
}

std::string PauliString::str() const {
    std::string out;
    out.reserve(sites_.size());
    for (auto p : sites_) {
        out.push_back(pauli_char(p));
    }
    return out;
}

StateVector apply_pauli(const StateVector &state, const PauliString &p) {
    if (p.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument("Pauli string size does not match the state");
    }
    std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
    kernels::apply_pauli_masks(amps, p.x_mask(), p.z_mask(), p.y_weight());
    return StateVector::unchecked(std::move(amps));
}

double detail::real_part_checked(Complex value) {
    if (std::abs(value.imag()) > 1e-8) {
        throw std::logic_error("expectation has imaginary residue " + std::to_string(value.imag()) +
                               "; observable is not Hermitian");
    }
    return value.real();
}

double expectation(const StateVector &state, const PauliString &p) {
    if (p.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument("observable acts on " + std::to_string(p.num_qubits()) + " qubits, state has " +
                                    std::to_string(state.num_qubits()));
    }
    if (p.is_identity()) {
        return p.coefficient() * state.norm() * state.norm();
    }
    Complex v = kernels::pauli_expectation_masks(state.amplitudes(), p.x_mask(), p.z_mask(), p.y_weight());
    return p.coefficient() * detail::real_part_checked(v);
}

double expectation(const StateVector &state, const PauliSum &sum) {
    double total = 0;
    for (const auto &term : sum) {
        total += expectation(state, term);
    }
    return total;
}

}  // namespace posthoc
