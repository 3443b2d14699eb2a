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

#include "posthoc/noise/channel.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace posthoc {

PauliChannel::PauliChannel(double p_i, double p_x, double p_y, double p_z) : p_{p_i, p_x, p_y, p_z} {
    double sum = 0;
    for (double p : p_) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument("channel probability outside [0,1]");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw std::invalid_argument("channel probabilities do not sum to 1");
    }
}

PauliChannel PauliChannel::identity() {
    return PauliChannel(1, 0, 0, 0);
}

PauliChannel PauliChannel::bitflip(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("bit-flip probability outside [0,1]");
    }
    PauliChannel ch(1.0 - p, p, 0, 0);
    ch.family_ = ChannelFamily::bitflip;
    ch.parameter_ = p;
    return ch;
}

PauliChannel PauliChannel::depolarizing(double p) {
    if (!(p >= 0.0 && p <= 4.0 / 3.0)) {
        throw std::invalid_argument("depolarizing strength outside [0,4/3]");
    }
    PauliChannel ch(1.0 - 0.75 * p, p / 4, p / 4, p / 4);
    ch.family_ = ChannelFamily::depolarizing;
    ch.parameter_ = p;
    return ch;
}

PauliChannel PauliChannel::make(ChannelFamily family, double p) {
    switch (family) {
        case ChannelFamily::none:
            return identity();
        case ChannelFamily::bitflip:
            return bitflip(p);
        case ChannelFamily::depolarizing:
            return depolarizing(p);
    }
    throw std::logic_error("unknown channel family");
}

ChannelFamily parse_channel_family(std::string_view name) {
    if (name == "none") {
        return ChannelFamily::none;
    }
    if (name == "bitflip") {
        return ChannelFamily::bitflip;
    }
    if (name == "depolarizing") {
        return ChannelFamily::depolarizing;
    }
    throw ConfigError("unknown channel family '" + std::string(name) + "'");
}

std::string_view channel_family_name(ChannelFamily f) {
    switch (f) {
        case ChannelFamily::none:
            return "none";
        case ChannelFamily::bitflip:
            return "bitflip";
        case ChannelFamily::depolarizing:
            return "depolarizing";
    }
    return "?";
}

PauliChannel PauliChannel::parse(std::string_view text) {
    if (text == "none") {
        return identity();
    }
    const size_t colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw ConfigError("channel '" + std::string(text) + "' must be none, bitflip:<p> or depolarizing:<p>");
    }
    const ChannelFamily family = parse_channel_family(text.substr(0, colon));
    if (family == ChannelFamily::none) {
        throw ConfigError("channel 'none' takes no parameter");
    }
    const std::string_view num = text.substr(colon + 1);
    double p = 0;
    auto [end, ec] = std::from_chars(num.data(), num.data() + num.size(), p);
    if (ec != std::errc() || end != num.data() + num.size()) {
        throw ConfigError("bad channel parameter '" + std::string(num) + "'");
    }
    try {
        return make(family, p);
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
}

double PauliChannel::probability(Pauli p) const {
    return p_[static_cast<int>(p)];
}

std::string PauliChannel::str() const {
    char buf[64];
    if (family_ != ChannelFamily::none) {
        std::snprintf(buf, sizeof buf, "%s:%.10g", channel_family_name(family_).data(), parameter_);
    } else if (is_identity()) {
        return "none";
    } else {
        std::snprintf(buf, sizeof buf, "pauli(%.6g,%.6g,%.6g,%.6g)", p_[0], p_[1], p_[2], p_[3]);
    }
    return buf;
}

double dual_factor(const PauliChannel &ch, Pauli site) {
    const double pi = ch.probability(Pauli::I);
    const double px = ch.probability(Pauli::X);
    const double py = ch.probability(Pauli::Y);
    const double pz = ch.probability(Pauli::Z);
    switch (site) {
        case Pauli::I:
            return 1.0;
        case Pauli::X:
            return pi + px - py - pz;
        case Pauli::Y:
            return pi - px + py - pz;
        case Pauli::Z:
            return pi - px - py + pz;
    }
    return 0.0;
}

double dual_factor(const PauliChannel &ch, const PauliString &p) {
    double f = 1.0;
    for (Pauli s : p.sites()) {
        f *= dual_factor(ch, s);
    }
    return f;
}

PauliString sample_pauli_error(const PauliChannel &ch, int num_qubits, Rng &rng) {
    std::vector<Pauli> sites(num_qubits, Pauli::I);
    if (ch.is_identity()) {
        return PauliString(std::move(sites));
    }
    const double cx = ch.probability(Pauli::I);
    const double cy = cx + ch.probability(Pauli::X);
    const double cz = cy + ch.probability(Pauli::Y);
    for (auto &s : sites) {
        const double u = unit_uniform(rng);
        if (u < cx) {
            s = Pauli::I;
        } else if (u < cy) {
            s = Pauli::X;
        } else if (u < cz) {
            s = Pauli::Y;
        } else {
            s = Pauli::Z;
        }
    }
    return PauliString(std::move(sites));
}

}  // namespace posthoc
