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

#include "posthoc/densekit/product_observable.h"

#include <algorithm>
#include <bit>
#include <cmath>

namespace posthoc {

char basis_char(MeasureBasis b) {
    return "ZXY"[static_cast<int>(b)];
}

Pauli basis_pauli(MeasureBasis b) {
    switch (b) {
        case MeasureBasis::X:
            return Pauli::X;
        case MeasureBasis::Y:
            return Pauli::Y;
        default:
            return Pauli::Z;
    }
}

ObservableFactor::ObservableFactor(int first, int size, MeasureBasis basis,
                                   std::shared_ptr<const std::vector<int8_t>> signs)
    : first_(first), size_(size), basis_(basis), signs_(std::move(signs)) {
    identity_ = std::all_of(signs_->begin(), signs_->end(), [](int8_t s) { return s == 1; });
}

ObservableFactor ObservableFactor::pauli(int qubit, Pauli p) {
    static const auto kTrivial = std::make_shared<const std::vector<int8_t>>(std::vector<int8_t>{1, 1});
    static const auto kSplit = std::make_shared<const std::vector<int8_t>>(std::vector<int8_t>{1, -1});
    switch (p) {
        case Pauli::I:
            return ObservableFactor(qubit, 1, MeasureBasis::Z, kTrivial);
        case Pauli::X:
            return ObservableFactor(qubit, 1, MeasureBasis::X, kSplit);
        case Pauli::Y:
            return ObservableFactor(qubit, 1, MeasureBasis::Y, kSplit);
        default:
            return ObservableFactor(qubit, 1, MeasureBasis::Z, kSplit);
    }
}

ObservableFactor ObservableFactor::diagonal(int first_qubit, int num_qubits, MeasureBasis basis,
                                            std::vector<int8_t> signs) {
    if (first_qubit < 0 || num_qubits < 1 || num_qubits > 16) {
        throw std::invalid_argument("invalid factor range");
    }
    if (signs.size() != (size_t{1} << num_qubits)) {
        throw std::invalid_argument("sign table needs 2^num_qubits entries");
    }
    for (auto s : signs) {
        if (s != 1 && s != -1) {
            throw std::invalid_argument("factor eigenvalues must be +1 or -1");
        }
    }
    return ObservableFactor(first_qubit, num_qubits, basis, std::make_shared<const std::vector<int8_t>>(std::move(signs)));
}

ObservableFactor ObservableFactor::shifted(int offset) const {
    return ObservableFactor(first_ + offset, size_, basis_, signs_);
}

ProductObservable::ProductObservable(int num_qubits, std::vector<ObservableFactor> factors)
    : num_qubits_(num_qubits), factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end(),
              [](const ObservableFactor &a, const ObservableFactor &b) { return a.first_qubit() < b.first_qubit(); });
    int next = 0;
    for (const auto &f : factors_) {
        if (f.first_qubit() != next) {
            throw std::invalid_argument("factors must tile the register: gap or overlap at qubit " +
                                        std::to_string(next));
        }
        next += f.num_qubits();
    }
    if (next != num_qubits_) {
        throw std::invalid_argument("factors cover " + std::to_string(next) + " of " + std::to_string(num_qubits_) +
                                    " qubits");
    }
}

ProductObservable ProductObservable::from_pauli(const PauliString &p) {
    std::vector<ObservableFactor> factors;
    for (int q = 0; q < p.num_qubits(); q++) {
        factors.push_back(ObservableFactor::pauli(q, p[q]));
    }
    return ProductObservable(p.num_qubits(), std::move(factors));
}

bool ProductObservable::is_identity() const {
    return std::all_of(factors_.begin(), factors_.end(), [](const ObservableFactor &f) { return f.is_identity(); });
}

namespace kernels {

void rotate_to_basis(std::span<Complex> amps, int num_qubits, int qubit, MeasureBasis basis, bool inverse) {
    static const Matrix2 kH = gates::hadamard();
    static const Matrix2 kSdag{Complex{1}, Complex{0}, Complex{0}, Complex{0, -1}};
    static const Matrix2 kS{Complex{1}, Complex{0}, Complex{0}, Complex{0, 1}};
    switch (basis) {
        case MeasureBasis::Z:
            return;
        case MeasureBasis::X:
            apply_1q(amps, num_qubits, qubit, kH);
            return;
        case MeasureBasis::Y:
            // H S^dagger maps the Y eigenbasis onto the computational basis.
            if (!inverse) {
                apply_1q(amps, num_qubits, qubit, kSdag);
                apply_1q(amps, num_qubits, qubit, kH);
            } else {
                apply_1q(amps, num_qubits, qubit, kH);
                apply_1q(amps, num_qubits, qubit, kS);
            }
            return;
    }
}

}  // namespace kernels

double expectation(const StateVector &state, const ProductObservable &obs) {
    if (obs.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument("observable acts on " + std::to_string(obs.num_qubits()) + " qubits, state has " +
                                    std::to_string(state.num_qubits()));
    }
    const int n = state.num_qubits();
    struct Active {
        int shift;
        uint32_t mask;
        const ObservableFactor *factor;
    };
    std::vector<Active> active;
    bool needs_rotation = false;
    for (const auto &f : obs.factors()) {
        if (f.is_identity()) {
            continue;
        }
        active.push_back({n - f.first_qubit() - f.num_qubits(), (uint32_t{1} << f.num_qubits()) - 1, &f});
        needs_rotation |= f.basis() != MeasureBasis::Z;
    }

    std::vector<Complex> rotated;
    std::span<const Complex> amps = state.amplitudes();
    if (needs_rotation) {
        rotated.assign(amps.begin(), amps.end());
        for (const auto &a : active) {
            for (int q = a.factor->first_qubit(); q < a.factor->first_qubit() + a.factor->num_qubits(); q++) {
                kernels::rotate_to_basis(rotated, n, q, a.factor->basis());
            }
        }
        amps = rotated;
    }

    double total = 0;
    for (size_t b = 0; b < amps.size(); b++) {
        double p = std::norm(amps[b]);
        if (p == 0) {
            continue;
        }
        int sign = 1;
        for (const auto &a : active) {
            sign *= a.factor->sign(static_cast<uint32_t>(b >> a.shift) & a.mask);
        }
        total += sign * p;
    }
    return total;
}

PauliSum pauli_expansion(const ObservableFactor &factor) {
    const int k = factor.num_qubits();
    const size_t dim = size_t{1} << k;
    // Walsh-Hadamard transform of the sign table: c_S = 2^-k sum_w s(w) (-1)^{|S & w|}.
    std::vector<double> coeffs(dim);
    for (size_t w = 0; w < dim; w++) {
        coeffs[w] = factor.sign(static_cast<uint32_t>(w));
    }
    for (size_t len = 1; len < dim; len <<= 1) {
        for (size_t i = 0; i < dim; i += 2 * len) {
            for (size_t j = i; j < i + len; j++) {
                double a = coeffs[j];
                double b = coeffs[j + len];
                coeffs[j] = a + b;
                coeffs[j + len] = a - b;
            }
        }
    }
    const Pauli letter = basis_pauli(factor.basis());
    PauliSum out;
    for (size_t s = 0; s < dim; s++) {
        double c = coeffs[s] / static_cast<double>(dim);
        if (std::abs(c) < 1e-12) {
            continue;
        }
        std::vector<Pauli> sites(k, Pauli::I);
        for (int q = 0; q < k; q++) {
            if ((s >> bit_position(k, q)) & 1) {
                sites[q] = letter;
            }
        }
        out.emplace_back(std::move(sites), c);
    }
    return out;
}

PauliSum pauli_expansion(const ProductObservable &obs, size_t max_strings) {
    std::vector<PauliSum> parts;
    size_t total = 1;
    for (const auto &f : obs.factors()) {
        parts.push_back(pauli_expansion(f));
        total *= parts.back().size();
        if (total > max_strings) {
            throw GuardError("Pauli expansion exceeds " + std::to_string(max_strings) + " strings");
        }
    }
    PauliSum acc{PauliString(std::vector<Pauli>{}, 1.0)};
    for (const auto &part : parts) {
        PauliSum next;
        next.reserve(acc.size() * part.size());
        for (const auto &a : acc) {
            for (const auto &b : part) {
                std::vector<Pauli> sites = a.sites();
                sites.insert(sites.end(), b.sites().begin(), b.sites().end());
                next.emplace_back(std::move(sites), a.coefficient() * b.coefficient());
            }
        }
        acc = std::move(next);
    }
    return acc;
}

}  // namespace posthoc
