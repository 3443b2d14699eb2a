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

#ifndef POSTHOC_CSSCODE_ENCODE_H
#define POSTHOC_CSSCODE_ENCODE_H

#include <vector>

#include "posthoc/clockham/xz_hamiltonian.h"
#include "posthoc/csscode/css_code.h"

namespace posthoc {

/// Physical registers above this size are refused.
inline constexpr int kMaxEncodedQubits = 24;

/// Linear extension of |b_1..b_n> -> |~b_1>..|~b_n>; block j occupies qubits [j m, (j+1) m).
StateVector encode_state(const CssCode &code, const StateVector &logical);

enum class EncodingMode : uint8_t {
    /// X -> X^(x)m, Z -> Z^(x)m, I -> I^(x)m.
    logical,
    /// Sites of a basis the code corrects become that basis' decode observable; the
    /// others stay bare transversal strings.
    decoded,
};

struct EncodedTerm {
    double coefficient;
    PauliString logical;
    ProductObservable observable;
};

struct EncodedHamiltonian {
    int num_logical;
    int block_size;
    std::vector<EncodedTerm> terms;

    int num_physical() const {
        return num_logical * block_size;
    }
    double K() const;
    std::vector<double> coefficients() const;
};

EncodedHamiltonian encode_hamiltonian(const CssCode &code, const XZHamiltonian &h, EncodingMode mode);

/// Per-term expectations <obs_i> on `state`.
std::vector<double> term_expectations(const StateVector &state, const EncodedHamiltonian &h);

}  // namespace posthoc

#endif
