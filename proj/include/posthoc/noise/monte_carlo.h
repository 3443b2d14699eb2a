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

#ifndef POSTHOC_NOISE_MONTE_CARLO_H
#define POSTHOC_NOISE_MONTE_CARLO_H

#include <functional>
#include <vector>

#include "posthoc/csscode/encode.h"
#include "posthoc/noise/channel.h"
#include "posthoc/noise/estimate.h"

namespace posthoc {

enum class McPath : uint8_t {
    /// Precomputed outcome distributions per measurement frame; errors become bit flips.
    frames,
    /// Applies each sampled error to a copy of the state vector and re-evaluates.
    state_vector,
};

/// Exact term expectations of P|s> for any Pauli error P, without touching the state.
///
/// Terms sharing a measurement basis per qubit share one outcome distribution. A Pauli
/// error permutes the outcomes of that distribution by XOR with the set of qubits where
/// it anticommutes with the measured basis, and changes nothing else.
class FrameEvaluator {
  public:
    FrameEvaluator(const StateVector &state, const EncodedHamiltonian &h);

    std::vector<double> term_expectations(const PauliString &error) const;
    size_t num_frames() const {
        return frames_.size();
    }

  private:
    struct Factor {
        int shift;
        uint32_t mask;
        const std::vector<int8_t> *signs;
    };
    struct Frame {
        uint64_t x_basis;  // qubits measured in X
        uint64_t y_basis;  // qubits measured in Y
        std::vector<uint64_t> outcomes;
        std::vector<double> probs;
        std::vector<int> terms;
    };
    int num_qubits_;
    std::vector<Frame> frames_;
    std::vector<std::vector<Factor>> factors_;
    std::vector<bool> identity_;
    EncodedHamiltonian h_;
};

/// Per rep: draw a Pauli error from the seed derived for that rep, evaluate every term
/// exactly on the corrupted state and fold through the acceptance formula. Reps may run
/// on `threads` workers; the reduction is in rep order, so the result does not depend
/// on the thread count.
NoisyEstimate mc_noisy_acceptance(const StateVector &s, const EncodedHamiltonian &h, const PauliChannel &ch,
                                  int64_t reps, uint64_t seed, int threads = 1, McPath path = McPath::frames);

/// Runs `body(index)` for index in [0, count) on up to `threads` workers.
void parallel_for(int64_t count, int threads, const std::function<void(int64_t)> &body);

}  // namespace posthoc

#endif
