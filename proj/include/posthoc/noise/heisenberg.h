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

#ifndef POSTHOC_NOISE_HEISENBERG_H
#define POSTHOC_NOISE_HEISENBERG_H

#include <vector>

#include "posthoc/csscode/encode.h"
#include "posthoc/noise/channel.h"

namespace posthoc {

inline constexpr size_t kMaxExpansionStrings = size_t{1} << 16;

/// sum over strings of coeff * dual_factor * <s|P|s>. Throws GuardError past
/// kMaxExpansionStrings strings.
double exact_noisy_expectation(const StateVector &s, const PauliSum &obs, const PauliChannel &ch);

/// Expands every term of an encoded Hamiltonian once and caches each string's noiseless
/// expectation, so a sweep over channels costs one multiply per string per point.
class HeisenbergEvaluator {
  public:
    HeisenbergEvaluator(const StateVector &state, const EncodedHamiltonian &h,
                        size_t max_strings = kMaxExpansionStrings);

    std::vector<double> term_expectations(const PauliChannel &ch) const;
    double acceptance(const PauliChannel &ch) const;
    size_t num_strings() const {
        return num_strings_;
    }
    const std::vector<double> &coefficients() const {
        return coefficients_;
    }

  private:
    struct Entry {
        double weight;  // expansion coefficient times <P>
        int nx;
        int ny;
        int nz;
    };
    std::vector<std::vector<Entry>> terms_;
    std::vector<double> coefficients_;
    size_t num_strings_ = 0;
};

}  // namespace posthoc

#endif
