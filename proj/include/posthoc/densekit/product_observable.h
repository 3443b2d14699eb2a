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

#ifndef POSTHOC_DENSEKIT_PRODUCT_OBSERVABLE_H
#define POSTHOC_DENSEKIT_PRODUCT_OBSERVABLE_H

#include <memory>
#include <vector>

#include "posthoc/densekit/pauli_string.h"

namespace posthoc {

/// Local basis a factor is diagonal in. A factor in basis X is measured by rotating
/// each of its qubits with a Hadamard and reading the computational bit.
enum class MeasureBasis : uint8_t { Z = 0, X = 1, Y = 2 };

char basis_char(MeasureBasis b);
Pauli basis_pauli(MeasureBasis b);

/// One tensor factor of a ProductObservable: a +-1 valued observable on the contiguous
/// qubit range [first_qubit, first_qubit + num_qubits), diagonal in `basis`.
///
/// `sign(bits)` is the eigenvalue attached to the local outcome string `bits` (first qubit
/// of the range = most significant bit). Single-site Paulis are the one-qubit case
/// (I = {+1, +1}, P = {+1, -1} in basis P); decode observables are the m-qubit case.
class ObservableFactor {
  public:
    static ObservableFactor pauli(int qubit, Pauli p);
    /// Throws std::invalid_argument unless signs has 2^num_qubits entries, each +-1.
    static ObservableFactor diagonal(int first_qubit, int num_qubits, MeasureBasis basis, std::vector<int8_t> signs);

    int first_qubit() const {
        return first_;
    }
    int num_qubits() const {
        return size_;
    }
    MeasureBasis basis() const {
        return basis_;
    }
    int sign(uint32_t local_bits) const {
        return (*signs_)[local_bits];
    }
    const std::vector<int8_t> &signs() const {
        return *signs_;
    }
    bool is_identity() const {
        return identity_;
    }
    ObservableFactor shifted(int offset) const;

  private:
    ObservableFactor(int first, int size, MeasureBasis basis, std::shared_ptr<const std::vector<int8_t>> signs);

    int first_;
    int size_;
    MeasureBasis basis_;
    std::shared_ptr<const std::vector<int8_t>> signs_;
    bool identity_;
};

/// Tensor product of ObservableFactors tiling an n-qubit register disjointly.
class ProductObservable {
  public:
    /// Sorts factors by position and validates the tiling; throws std::invalid_argument.
    ProductObservable(int num_qubits, std::vector<ObservableFactor> factors);
    static ProductObservable from_pauli(const PauliString &p);

    int num_qubits() const {
        return num_qubits_;
    }
    const std::vector<ObservableFactor> &factors() const {
        return factors_;
    }
    bool is_identity() const;

  private:
    int num_qubits_;
    std::vector<ObservableFactor> factors_;
};

/// <state|obs|state>. Evaluated by rotating a copy of the state into every factor's
/// measurement basis and summing |amplitude|^2 times the product of factor signs.
double expectation(const StateVector &state, const ProductObservable &obs);

/// Pauli expansion of one factor, as strings on the factor's own qubits.
PauliSum pauli_expansion(const ObservableFactor &factor);
/// Pauli expansion of the whole product. Throws GuardError if more than `max_strings`.
PauliSum pauli_expansion(const ProductObservable &obs, size_t max_strings);

namespace kernels {
/// Rotates qubit `q` so that `basis` eigenstates map to computational eigenstates
/// (+1 eigenstate -> |0>). `inverse` undoes the rotation.
void rotate_to_basis(std::span<Complex> amps, int num_qubits, int qubit, MeasureBasis basis, bool inverse = false);
}  // namespace kernels

}  // namespace posthoc

#endif
