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

#ifndef POSTHOC_CLOCKHAM_SERIALIZE_H
#define POSTHOC_CLOCKHAM_SERIALIZE_H

#include <string>
#include <string_view>

#include "posthoc/clockham/xz_hamiltonian.h"

namespace posthoc {

/// JSON document:
///   {"num_qubits": n, "terms": [{"coefficient": 1.75, "paulis": "III"}, ...]}
/// Coefficients are written with 17 significant digits, so reading back is exact.
std::string to_text(const XZHamiltonian &h);

/// Throws ConfigError on malformed input.
XZHamiltonian hamiltonian_from_text(std::string_view text);

}  // namespace posthoc

#endif
