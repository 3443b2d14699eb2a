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

#ifndef POSTHOC_NOISE_CHANNEL_H
#define POSTHOC_NOISE_CHANNEL_H

#include <string>
#include <string_view>

#include "posthoc/densekit/pauli_string.h"

namespace posthoc {

enum class ChannelFamily : uint8_t { none, bitflip, depolarizing };

/// Single-qubit Pauli channel rho -> sum_P p_P P rho P, applied i.i.d. to every qubit.
class PauliChannel {
  public:
    /// Throws std::invalid_argument unless every probability is in [0,1] and they sum
    /// to 1 within 1e-12.
    PauliChannel(double p_i, double p_x, double p_y, double p_z);

    static PauliChannel identity();
    /// (1-p, p, 0, 0).
    static PauliChannel bitflip(double p);
    /// (1-3p/4, p/4, p/4, p/4).
    static PauliChannel depolarizing(double p);
    static PauliChannel make(ChannelFamily family, double p);
    /// "none", "bitflip:<p>" or "depolarizing:<p>". Throws ConfigError.
    static PauliChannel parse(std::string_view text);

    double probability(Pauli p) const;
    bool is_identity() const {
        return p_[0] == 1.0;
    }
    ChannelFamily family() const {
        return family_;
    }
    double parameter() const {
        return parameter_;
    }
    std::string str() const;

  private:
    double p_[4];
    ChannelFamily family_ = ChannelFamily::none;
    double parameter_ = 0;
};

ChannelFamily parse_channel_family(std::string_view name);
std::string_view channel_family_name(ChannelFamily f);

/// The scalar f with E^dagger(P) = f P.
double dual_factor(const PauliChannel &ch, Pauli site);

/// Product of dual factors over the sites of `p` (the coefficient is ignored).
double dual_factor(const PauliChannel &ch, const PauliString &p);

/// I.i.d. site-wise draw; identity channels consume no randomness.
PauliString sample_pauli_error(const PauliChannel &ch, int num_qubits, Rng &rng);

}  // namespace posthoc

#endif
