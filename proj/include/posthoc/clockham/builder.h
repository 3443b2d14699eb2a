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

#ifndef POSTHOC_CLOCKHAM_BUILDER_H
#define POSTHOC_CLOCKHAM_BUILDER_H

#include "posthoc/clockham/circuit.h"
#include "posthoc/clockham/xz_hamiltonian.h"

namespace posthoc {

/// The four clock-Hamiltonian components, each Pauli-expanded (unmerged).
struct ComponentTerms {
    PauliSum in;
    PauliSum clock;
    PauliSum prop;
    PauliSum out;

    PauliSum all() const;
};

/// Components on 1 + T qubits (computation qubit, then clock c_1..c_T).
///
/// H_in  = (I - |x><x|) (x) |0><0|_{c1}
/// H_clock = sum_{t<T} |01><01|_{c_t c_{t+1}}
/// H_prop: boundary steps use the uncontrolled transition U_t (x) X_{c_t} with the
///   one-sided clock projectors; interior steps are controlled by |1>_{c_{t-1}} |0>_{c_{t+1}}.
/// H_out = |0><0| (claimed accept) or |1><1| (claimed reject) on the output, (x) |1><1|_{c_T}.
ComponentTerms build_component_terms(const Circuit &c, bool claimed_accept);

XZHamiltonian build_component_hamiltonian(const Circuit &c, bool claimed_accept);

}  // namespace posthoc

#endif
