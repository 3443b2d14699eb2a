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

#include "posthoc/clockham/circuit.h"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace posthoc {

namespace {

double parse_angle(std::string_view text) {
    std::string s(text);
    // "pi/8", "3*pi/8", "-pi/4" or a plain decimal.
    auto pi_at = s.find("pi");
    if (pi_at == std::string::npos) {
        size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) {
            throw std::invalid_argument("bad angle: " + s);
        }
        return v;
    }
    double scale = 1;
    std::string head = s.substr(0, pi_at);
    if (!head.empty() && head.back() == '*') {
        head.pop_back();
    }
    if (head == "-") {
        scale = -1;
    } else if (!head.empty()) {
        scale = std::stod(head);
    }
    std::string tail = s.substr(pi_at + 2);
    double denom = 1;
    if (!tail.empty()) {
        if (tail[0] != '/') {
            throw std::invalid_argument("bad angle: " + s);
        }
        denom = std::stod(tail.substr(1));
    }
    return scale * std::numbers::pi / denom;
}

}  // namespace

Gate Gate::parse(std::string_view text) {
    if (text == "X") {
        return x();
    }
    if (text.size() > 3 && text.substr(0, 2) == "D(" && text.back() == ')') {
        try {
            return rot(parse_angle(text.substr(2, text.size() - 3)));
        } catch (const std::exception &) {
            throw std::invalid_argument("unsupported gate: " + std::string(text));
        }
    }
    throw std::invalid_argument("unsupported gate: " + std::string(text));
}

Matrix2 Gate::matrix() const {
    return kind == Kind::pauli_x ? gates::X : gates::rotation(phi);
}

std::string Gate::str() const {
    if (kind == Kind::pauli_x) {
        return "X";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "D(%.17g)", phi);
    return buf;
}

Circuit::Circuit(int input_bit, std::vector<Gate> gates) : input_bit_(input_bit), gates_(std::move(gates)) {
    if (input_bit != 0 && input_bit != 1) {
        throw std::invalid_argument("input bit must be 0 or 1");
    }
    if (gates_.empty()) {
        throw std::invalid_argument("circuit needs at least one gate");
    }
}

Circuit Circuit::example(int input_bit) {
    return Circuit(input_bit, {Gate::x(), Gate::rot(std::numbers::pi / 8)});
}

StateVector circuit_state(const Circuit &c, int upto_step) {
    StateVector s = StateVector::basis(1, c.input_bit());
    for (int t = 0; t < upto_step; t++) {
        s = apply_single_qubit(s, 0, c.gates()[t].matrix());
    }
    return s;
}

StateVector output_state(const Circuit &c) {
    return circuit_state(c, c.steps());
}

StateVector history_state(const Circuit &c) {
    const int T = c.steps();
    const int n = 1 + T;
    std::vector<Complex> amps(size_t{1} << n, Complex{0});
    const double w = 1.0 / std::sqrt(static_cast<double>(T + 1));
    StateVector comp = StateVector::basis(1, c.input_bit());
    for (int t = 0; t <= T; t++) {
        if (t > 0) {
            comp = apply_single_qubit(comp, 0, c.gates()[t - 1].matrix());
        }
        // Clock 1^t 0^(T-t): clock qubits c_1..c_t set, c_1 being the most significant.
        uint64_t clock = ((uint64_t{1} << t) - 1) << (T - t);
        for (uint64_t b = 0; b < 2; b++) {
            amps[(b << T) | clock] += w * comp[b];
        }
    }
    return StateVector::from_amplitudes(std::move(amps));
}

}  // namespace posthoc
