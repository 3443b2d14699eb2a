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

#ifndef POSTHOC_DENSEKIT_STATE_VECTOR_H
#define POSTHOC_DENSEKIT_STATE_VECTOR_H

#include <array>
#include <span>
#include <vector>

#include "posthoc/common.h"

namespace posthoc {

/// Row-major 2x2 complex matrix {m00, m01, m10, m11}.
using Matrix2 = std::array<Complex, 4>;

namespace gates {
inline constexpr Matrix2 I{Complex{1}, Complex{0}, Complex{0}, Complex{1}};
inline constexpr Matrix2 X{Complex{0}, Complex{1}, Complex{1}, Complex{0}};
inline constexpr Matrix2 Y{Complex{0}, Complex{0, -1}, Complex{0, 1}, Complex{0}};
inline constexpr Matrix2 Z{Complex{1}, Complex{0}, Complex{0}, Complex{-1}};
Matrix2 hadamard();
/// D(phi) = cos(phi) Z + sin(phi) X.
Matrix2 rotation(double phi);
}  // namespace gates

/// Dense pure state on `num_qubits` qubits. Qubit 0 is the most significant index bit.
///
/// States built through the checked factories are unit norm within 1e-10. Applying a
/// non-unitary operator (projectors, Pauli sums) yields an unnormalised vector; callers
/// that need a state again go through `normalized()`.
class StateVector {
  public:
    /// |0...0> on `num_qubits` qubits.
    explicit StateVector(int num_qubits);

    static StateVector basis(int num_qubits, uint64_t index);
    /// Validates length (power of two, at least 2) and unit norm within 1e-10.
    static StateVector from_amplitudes(std::vector<Complex> amplitudes);
    /// Validates length only. Used by kernels whose output may be unnormalised.
    static StateVector unchecked(std::vector<Complex> amplitudes);
    /// Uniformly random state: normalised i.i.d. complex Gaussian amplitudes.
    static StateVector random(int num_qubits, Rng &rng);

    int num_qubits() const {
        return num_qubits_;
    }
    size_t dim() const {
        return amps_.size();
    }
    std::span<const Complex> amplitudes() const {
        return amps_;
    }
    const Complex &operator[](size_t index) const {
        return amps_[index];
    }

    double norm() const;
    StateVector normalized() const;
    Complex inner(const StateVector &other) const;

  private:
    StateVector(int num_qubits, std::vector<Complex> amplitudes);

    int num_qubits_;
    std::vector<Complex> amps_;
};

StateVector apply_single_qubit(const StateVector &state, int qubit, const Matrix2 &op);

/// Tensor product a (x) b; `a` occupies the leading qubits.
StateVector tensor(const StateVector &a, const StateVector &b);

namespace kernels {

/// i^k for any integer k.
Complex i_power(int k);

/// In-place application of `op` to qubit `qubit` of an `num_qubits` register.
void apply_1q(std::span<Complex> amps, int num_qubits, int qubit, const Matrix2 &op);

/// Multiplies by the Pauli operator with the given masks: bits in `x_mask` are flipped,
/// bits in `z_mask` pick up a -1 phase, and the overall factor i^num_y accounts for Y = iXZ.
void apply_pauli_masks(std::span<Complex> amps, uint64_t x_mask, uint64_t z_mask, int num_y);

/// <psi| P |psi> for the Pauli with the given masks (same convention as apply_pauli_masks).
Complex pauli_expectation_masks(std::span<const Complex> amps, uint64_t x_mask, uint64_t z_mask, int num_y);

}  // namespace kernels

}  // namespace posthoc

#endif
