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

#ifndef POSTHOC_PROTOCOL_PROTOCOL_H
#define POSTHOC_PROTOCOL_PROTOCOL_H

#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "posthoc/clockham/circuit.h"
#include "posthoc/clockham/xz_hamiltonian.h"
#include "posthoc/csscode/css_code.h"
#include "posthoc/noise/channel.h"
#include "posthoc/noise/estimate.h"

namespace posthoc {

/// What the prover hands over in a round.
///
/// An honest prover holds the computation and sends its history state encoded in the
/// round's code. A fixed-state prover sends the same physical register every round.
/// A maximally random prover sends a fresh normalized complex-Gaussian state.
class ProverStrategy {
  public:
    enum class Kind : uint8_t { honest, fixed_state, maximally_random };

    static ProverStrategy honest(Circuit circuit);
    static ProverStrategy fixed_state(StateVector state);
    static ProverStrategy maximally_random();

    Kind kind() const {
        return kind_;
    }
    std::string name() const;

    /// The physical register for an announcement over `num_logical` qubits in `code`.
    /// Throws std::invalid_argument if a fixed state has the wrong size.
    StateVector prepare(const CssCode &code, int num_logical, Rng &rng) const;

  private:
    struct Cache;
    ProverStrategy(Kind kind, std::optional<Circuit> circuit, std::optional<StateVector> state);

    Kind kind_;
    std::optional<Circuit> circuit_;
    std::optional<StateVector> state_;
    std::shared_ptr<Cache> cache_;
};

struct ProtocolTranscript {
    int64_t round = 0;
    int term_index = 0;
    double term_coefficient = 0;
    /// Per physical qubit; +1 for qubits of unmeasured (identity) blocks.
    std::vector<int> raw_outcomes;
    /// Per logical block; +1 for identity blocks.
    std::vector<int> decoded_outcomes;
    int product_outcome = 1;
    bool accepted = false;
};

/// One verifier round: draw a term with probability |a_i|/K, take the prover's state,
/// corrupt it with one sampled error from `ch`, measure every non-identity block
/// transversally in the term's basis, decode each block and accept on -sgn(a_i).
ProtocolTranscript run_round(const XZHamiltonian &h, const CssCode &code, const ProverStrategy &prover,
                             const PauliChannel &ch, Rng &rng);

/// Called once per round, in round order.
using TranscriptSink = std::function<void(const ProtocolTranscript &)>;

/// `rounds` independent rounds, round r seeded with derive_seed(seed, r).
NoisyEstimate estimate_acceptance(const XZHamiltonian &h, const CssCode &code, const ProverStrategy &prover,
                                  const PauliChannel &ch, int64_t rounds, uint64_t seed, int threads = 1,
                                  const TranscriptSink &sink = {});

/// 1/2 (1 - lambda_min / K), the largest acceptance any state can reach.
double soundness_bound(const XZHamiltonian &h);

/// {"round", "term_index", "term_coefficient", "outcomes", "decoded", "product_outcome",
/// "accepted"} on one line.
std::string transcript_json(const ProtocolTranscript &t);

}  // namespace posthoc

#endif
