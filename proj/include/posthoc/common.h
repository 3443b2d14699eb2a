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

#ifndef POSTHOC_COMMON_H
#define POSTHOC_COMMON_H

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace posthoc {

using Complex = std::complex<double>;

/// Random stream used by every sampling operation. Seeded explicitly; never from a device.
using Rng = std::mt19937_64;

/// Raised when a configuration or user input is malformed (CLI exit code 1).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a numerical or resource guard trips (CLI exit code 2).
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Position of qubit `q` inside a basis-state index for an `n`-qubit register.
/// Qubit 0 is the most significant bit.
constexpr int bit_position(int num_qubits, int qubit) {
    return num_qubits - 1 - qubit;
}

/// Uniform double in [0, 1) from the top 53 bits, so streams do not depend on the
/// standard library's distribution implementation.
inline double unit_uniform(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// SplitMix64 finalizer over the master seed mixed with an index. Used for every
/// per-rep, per-round and per-point stream.
constexpr uint64_t derive_seed(uint64_t master, uint64_t index) {
    uint64_t z = master ^ (index * 0x9E3779B97F4A7C15ULL + 0x632BE59BD9B4E019ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace posthoc

#endif
