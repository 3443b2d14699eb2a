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

#ifndef POSTHOC_CLOCKHAM_CIRCUIT_H
#define POSTHOC_CLOCKHAM_CIRCUIT_H

#include <string>
#include <string_view>
#include <vector>

#include "posthoc/densekit/state_vector.h"

namespace posthoc {

/// Single-qubit gate from {X, D(phi)} with D(phi) = cos(phi) Z + sin(phi) X.
/// Both are real symmetric involutions.
struct Gate {
    enum class Kind : uint8_t { pauli_x, rotation };

    Kind kind = Kind::pauli_x;
    double phi = 0;

    static Gate x() {
        return {Kind::pauli_x, 0};
    }
    static Gate rot(double phi) {
        return {Kind::rotation, phi};
    }
    /// Accepts "X" or "D(<radians>)"; "D(pi/8)" style fractions of pi are also accepted.
    static Gate parse(std::string_view text);

    Matrix2 matrix() const;
    std::string str() const;
};

/// Single-qubit computation |x> -> U_T ... U_1 |x>.
class Circuit {
  public:
    Circuit(int input_bit, std::vector<Gate> gates);
    /// X followed by D(pi/8), the worked example.
    static Circuit example(int input_bit);

    int input_bit() const {
        return input_bit_;
    }
    const std::vector<Gate> &gates() const {
        return gates_;
    }
    /// Number of time steps (gates).
    int steps() const {
        return static_cast<int>(gates_.size());
    }

  private:
    int input_bit_;
    std::vector<Gate> gates_;
};

/// U_t ... U_1 |x> on one qubit.
StateVector circuit_state(const Circuit &c, int upto_step);
/// Output of the full circuit.
StateVector output_state(const Circuit &c);

/// Feynman-Kitaev history state on 1 + T qubits: computation qubit first, then the unary
/// clock c_1..c_T with time t encoded as 1^t 0^(T-t).
StateVector history_state(const Circuit &c);

}  // namespace posthoc

#endif
