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

#include "posthoc/csscode/css_code.h"

#include <bit>
#include <cmath>

#include "posthoc/densekit/pauli_string.h"

namespace posthoc {

namespace {

// Rows of the Hamming parity-check matrix; column j (1-based) is j written in binary.
constexpr uint32_t kHammingRows[3] = {0b0001111, 0b0110011, 0b1010101};

StateVector transversal_x(const StateVector &s) {
    return apply_pauli(s, PauliString(std::vector<Pauli>(s.num_qubits(), Pauli::X)));
}

StateVector steane_zero() {
    std::vector<Complex> amps(128, Complex{0});
    amps[0] = 1;
    StateVector s = StateVector::unchecked(std::move(amps));
    // Project |0000000> onto the +1 eigenspace of the X- and Z-type stabilizers.
    for (uint32_t row : kHammingRows) {
        for (Pauli type : {Pauli::X, Pauli::Z}) {
            std::vector<Pauli> sites(7, Pauli::I);
            for (int q = 0; q < 7; q++) {
                if ((row >> bit_position(7, q)) & 1) {
                    sites[q] = type;
                }
            }
            StateVector flipped = apply_pauli(s, PauliString(sites));
            std::vector<Complex> sum(128);
            for (size_t k = 0; k < 128; k++) {
                sum[k] = 0.5 * (s[k] + flipped[k]);
            }
            s = StateVector::unchecked(std::move(sum));
        }
    }
    return s.normalized();
}

}  // namespace

int hamming_syndrome(uint32_t bits) {
    int s = 0;
    for (int r = 0; r < 3; r++) {
        s |= (std::popcount(bits & kHammingRows[r]) & 1) << (2 - r);
    }
    return s;
}

CssCode::CssCode(CodeFamily family, int m, StateVector zero, StateVector one)
    : family_(family), m_(m), zero_(std::move(zero)), one_(std::move(one)) {
}

CssCode CssCode::none() {
    return CssCode(CodeFamily::none, 1, StateVector::basis(1, 0), StateVector::basis(1, 1));
}

CssCode CssCode::repetition(int m) {
    if (m < 3 || m % 2 == 0 || m > 15) {
        throw std::invalid_argument("repetition code needs an odd block size in [3, 15], got " + std::to_string(m));
    }
    return CssCode(CodeFamily::repetition, m, StateVector::basis(m, 0), StateVector::basis(m, (uint64_t{1} << m) - 1));
}

CssCode CssCode::steane() {
    StateVector zero = steane_zero();
    StateVector one = transversal_x(zero);
    return CssCode(CodeFamily::steane, 7, std::move(zero), std::move(one));
}

CssCode CssCode::parse(std::string_view spec) {
    if (spec == "none") {
        return none();
    }
    if (spec == "steane") {
        return steane();
    }
    constexpr std::string_view prefix = "repetition:";
    if (spec.substr(0, prefix.size()) == prefix) {
        std::string digits(spec.substr(prefix.size()));
        try {
            size_t used = 0;
            int m = std::stoi(digits, &used);
            if (used == digits.size()) {
                return repetition(m);
            }
        } catch (const std::exception &e) {
            throw ConfigError("code '" + std::string(spec) + "': " + e.what());
        }
    }
    throw ConfigError("unknown code '" + std::string(spec) + "' (expected none, repetition:<m> or steane)");
}

std::string CssCode::name() const {
    switch (family_) {
        case CodeFamily::none:
            return "none";
        case CodeFamily::repetition:
            return "repetition:" + std::to_string(m_);
        default:
            return "steane";
    }
}

bool CssCode::corrects(MeasureBasis basis) const {
    switch (family_) {
        case CodeFamily::none:
            return false;
        case CodeFamily::repetition:
            return basis == MeasureBasis::Z;
        default:
            return basis != MeasureBasis::Y;
    }
}

DecodeResult CssCode::decode(MeasureBasis basis, uint32_t bits) const {
    if (basis == MeasureBasis::Y) {
        throw std::invalid_argument("CSS transversal measurements are X or Z");
    }
    const uint32_t all = (uint32_t{1} << m_) - 1;
    bits &= all;
    switch (family_) {
        case CodeFamily::none:
            return {static_cast<int>(bits & 1), bits};
        case CodeFamily::repetition:
            if (basis == MeasureBasis::Z) {
                int majority = std::popcount(bits) > m_ / 2 ? 1 : 0;
                return {majority, majority ? all : 0};
            }
            return {std::popcount(bits) & 1, bits};
        default: {
            int s = hamming_syndrome(bits);
            uint32_t corrected = bits;
            if (s != 0) {
                corrected ^= uint32_t{1} << bit_position(7, s - 1);
            }
            return {std::popcount(corrected) & 1, corrected};
        }
    }
}

DecodeResult decode_outcomes(const CssCode &code, MeasureBasis basis, uint32_t bits) {
    if (bits >> code.block_size()) {
        throw std::invalid_argument("measurement word longer than the block");
    }
    return code.decode(basis, bits);
}

DecodeResult decode_outcomes(const CssCode &code, MeasureBasis basis, std::string_view bits) {
    if (static_cast<int>(bits.size()) != code.block_size()) {
        throw std::invalid_argument("measurement word has " + std::to_string(bits.size()) + " bits, block has " +
                                    std::to_string(code.block_size()));
    }
    uint32_t word = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("measurement word must be binary");
        }
        word = (word << 1) | static_cast<uint32_t>(c - '0');
    }
    return code.decode(basis, word);
}

ObservableFactor DecodeObservable::factor(int first_qubit) const {
    return ObservableFactor::diagonal(first_qubit, block_size, basis, signs);
}

DenseMatrix DecodeObservable::projector(int logical_bit) const {
    const int want = logical_bit == 0 ? 1 : -1;
    // M_b = (I + s_b D)/2 with s_0 = +1, s_1 = -1.
    DenseMatrix d = dense();
    DenseMatrix id = DenseMatrix::Identity(d.rows(), d.cols());
    return 0.5 * (id + static_cast<double>(want) * d);
}

DenseMatrix DecodeObservable::dense() const {
    return to_dense(ProductObservable(block_size, {factor(0)}));
}

DecodeObservable decode_observable(const CssCode &code, MeasureBasis basis) {
    const size_t dim = size_t{1} << code.block_size();
    std::vector<int8_t> signs(dim);
    for (size_t w = 0; w < dim; w++) {
        signs[w] = code.decode(basis, static_cast<uint32_t>(w)).logical_bit == 0 ? 1 : -1;
    }
    return {code.name(), basis, code.block_size(), std::move(signs)};
}

}  // namespace posthoc
