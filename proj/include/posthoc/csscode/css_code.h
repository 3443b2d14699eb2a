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

#ifndef POSTHOC_CSSCODE_CSS_CODE_H
#define POSTHOC_CSSCODE_CSS_CODE_H

#include <string>
#include <string_view>
#include <vector>

#include "posthoc/densekit/dense.h"
#include "posthoc/densekit/product_observable.h"

namespace posthoc {

enum class CodeFamily : uint8_t { none, repetition, steane };

struct DecodeResult {
    int logical_bit;
    /// Corrected measurement word (same bit convention as the input).
    uint32_t corrected;
};

/// A CSS code with transversal logical X = X^(x)m and Z = Z^(x)m.
///
/// Local m-bit words are read with the block's first qubit as the most significant bit.
/// `none` is the trivial one-qubit code used for unencoded runs.
class CssCode {
  public:
    static CssCode none();
    /// Odd m >= 3.
    static CssCode repetition(int m);
    /// [[7,1,3]]; both stabilizer types given by the Hamming parity checks
    /// 0001111 / 0110011 / 1010101.
    static CssCode steane();
    /// "none", "repetition:<m>" or "steane". Throws ConfigError.
    static CssCode parse(std::string_view spec);

    CodeFamily family() const {
        return family_;
    }
    int block_size() const {
        return m_;
    }
    std::string name() const;

    const StateVector &logical_zero() const {
        return zero_;
    }
    const StateVector &logical_one() const {
        return one_;
    }

    /// Classical post-processing of a transversal measurement word in `basis` (Z or X).
    DecodeResult decode(MeasureBasis basis, uint32_t bits) const;

    /// Whether the decoder corrects errors that flip outcomes of `basis` measurements.
    bool corrects(MeasureBasis basis) const;

  private:
    CssCode(CodeFamily family, int m, StateVector zero, StateVector one);

    CodeFamily family_;
    int m_;
    StateVector zero_;
    StateVector one_;
};

/// Hamming [7,4,3] syndrome of a 7-bit word: the 1-based position of a single flip, 0 if none.
int hamming_syndrome(uint32_t bits);

/// decode_outcomes with the word given as text, e.g. "010". Throws on a wrong length.
DecodeResult decode_outcomes(const CssCode &code, MeasureBasis basis, std::string_view bits);
DecodeResult decode_outcomes(const CssCode &code, MeasureBasis basis, uint32_t bits);

/// M0 - M1 on one block, where M0 (M1) projects onto words decoded to 0 (1), taken in
/// the basis of the measurement.
struct DecodeObservable {
    std::string code_name;
    MeasureBasis basis;
    int block_size;
    std::vector<int8_t> signs;

    ObservableFactor factor(int first_qubit) const;
    /// M0 (logical_bit = 0) or M1 as a dense matrix on the block.
    DenseMatrix projector(int logical_bit) const;
    DenseMatrix dense() const;
};

DecodeObservable decode_observable(const CssCode &code, MeasureBasis basis);

}  // namespace posthoc

#endif
