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

#ifndef POSTHOC_DENSEKIT_PAULI_STRING_H
#define POSTHOC_DENSEKIT_PAULI_STRING_H

#include <string>
#include <string_view>
#include <vector>

#include "posthoc/densekit/state_vector.h"

namespace posthoc {

enum class Pauli : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);
const Matrix2 &pauli_matrix(Pauli p);

/// True when the two single-site Paulis anticommute.
constexpr bool anticommutes(Pauli a, Pauli b) {
    return a != Pauli::I && b != Pauli::I && a != b;
}

/// Tensor product of single-site Paulis carrying a real coefficient.
class PauliString {
  public:
    PauliString() = default;
    PauliString(std::vector<Pauli> sites, double coefficient = 1.0);
    static PauliString identity(int num_qubits, double coefficient = 1.0);
    /// Parses "XZI"-style text; `_` is accepted as identity.
    static PauliString from_str(std::string_view text, double coefficient = 1.0);

    int num_qubits() const {
        return static_cast<int>(sites_.size());
    }
    const std::vector<Pauli> &sites() const {
        return sites_;
    }
    Pauli operator[](int qubit) const {
        return sites_[qubit];
    }
    double coefficient() const {
        return coefficient_;
    }
    PauliString with_coefficient(double c) const {
        return PauliString(sites_, c);
    }

    int x_weight() const;
    int z_weight() const;
    int y_weight() const;
    /// Number of non-identity sites.
    int weight() const;
    bool is_identity() const {
        return weight() == 0;
    }
    /// Only I, X and Z sites.
    bool is_xz() const {
        return y_weight() == 0;
    }

    /// Bitmask of sites whose operator flips the basis bit (X and Y).
    uint64_t x_mask() const;
    /// Bitmask of sites whose operator applies a phase (Z and Y).
    uint64_t z_mask() const;

    std::string str() const;

    bool same_sites(const PauliString &other) const {
        return sites_ == other.sites_;
    }
    bool operator==(const PauliString &other) const = default;

  private:
    std::vector<Pauli> sites_;
    double coefficient_ = 1.0;
};

/// Real linear combination of Pauli strings (coefficients carried by the strings).
using PauliSum = std::vector<PauliString>;

StateVector apply_pauli(const StateVector &state, const PauliString &p);

/// coefficient * <state|P|state>.
double expectation(const StateVector &state, const PauliString &p);
/// Sum over the terms of expectation(state, term).
double expectation(const StateVector &state, const PauliSum &sum);

namespace detail {
/// Accepts a complex expectation whose imaginary part must be numerically zero.
/// Throws std::logic_error when |imag| exceeds 1e-8 (non-Hermitian observable).
double real_part_checked(Complex value);
}  // namespace detail

}  // namespace posthoc

#endif
