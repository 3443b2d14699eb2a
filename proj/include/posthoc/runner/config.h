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

#ifndef POSTHOC_RUNNER_CONFIG_H
#define POSTHOC_RUNNER_CONFIG_H

#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "posthoc/clockham/circuit.h"
#include "posthoc/clockham/xz_hamiltonian.h"
#include "posthoc/noise/channel.h"

namespace posthoc {

inline constexpr int kConfigSchemaVersion = 1;

enum class SweepMode : uint8_t { exact, mc, protocol };

SweepMode parse_sweep_mode(std::string_view text);
std::string_view sweep_mode_name(SweepMode m);

/// Which Hamiltonian the verifier announces for the instance.
enum class HamiltonianSource : uint8_t {
    /// The printed three-qubit decomposition; only defined for the X, D(pi/8) circuit
    /// with an accepting claim.
    example,
    /// Assembled from the clock construction for any circuit.
    builder,
};

struct InstanceConfig {
    std::vector<Gate> gates = {Gate::x(), Gate::rot(std::numbers::pi / 8)};
    int input_bit = 0;
    bool claimed_accept = true;
    HamiltonianSource hamiltonian = HamiltonianSource::example;

    Circuit circuit() const;
    /// Throws ConfigError if the source does not fit the circuit.
    XZHamiltonian build_hamiltonian() const;
};

struct SweepConfig {
    InstanceConfig instance;
    std::string code = "repetition:3";
    ChannelFamily channel = ChannelFamily::bitflip;
    std::vector<double> grid;
    int64_t reps = 1000;
    SweepMode mode = SweepMode::exact;
    uint64_t seed = 1;
    int threads = 1;
};

/// Throws ConfigError: grid in [0,1] and strictly increasing, reps >= 1, known code.
void validate(const SweepConfig &cfg);

/// Parses the JSON sweep document. Errors are ConfigError messages of the form
/// "<source>:<line>: <field>: <problem>".
SweepConfig parse_sweep_config(std::string_view text, std::string_view source = "config");
SweepConfig load_sweep_config(const std::string &path);
std::string to_json(const SweepConfig &cfg);

/// `count` points from lo to hi inclusive.
std::vector<double> equispaced_grid(double lo, double hi, int count);
/// 12 points on [0,1].
std::vector<double> coarse_grid();
/// 12 points on [0.05,0.15].
std::vector<double> steane_grid();

/// The standard campaign for a code: coarse grid, bit flips and 1000 reps for repetition
/// codes; refined grid, depolarizing noise and 4000 reps for Steane.
SweepConfig default_sweep(std::string_view code);

}  // namespace posthoc

#endif
