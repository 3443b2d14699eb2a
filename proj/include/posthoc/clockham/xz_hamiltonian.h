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

#ifndef POSTHOC_CLOCKHAM_XZ_HAMILTONIAN_H
#define POSTHOC_CLOCKHAM_XZ_HAMILTONIAN_H

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "posthoc/densekit/dense.h"
#include "posthoc/densekit/pauli_string.h"

namespace posthoc {

/// Coefficients with magnitude below this are dropped when a Hamiltonian is assembled.
inline constexpr double kCoefficientPruning = 1e-12;

/// H = sum_i a_i S_i with every S_i a distinct Pauli string over {I, X, Z}.
///
/// Construction merges repeated strings (first-appearance order is kept), prunes
/// near-zero coefficients and rejects Y sites. K = sum |a_i| is strictly positive.
class XZHamiltonian {
  public:
    XZHamiltonian(int num_qubits, const PauliSum &terms);

    int num_qubits() const {
        return num_qubits_;
    }
    const PauliSum &terms() const {
        return terms_;
    }
    size_t size() const {
        return terms_.size();
    }
    /// Sum of |a_i|.
    double K() const {
        return k_;
    }
    std::optional<double> coefficient_of(std::string_view paulis) const;
    DenseMatrix dense() const;

  private:
    int num_qubits_;
    PauliSum terms_;
    double k_;
};

/// Thresholds of a local Hamiltonian instance: yes-instances have lambda_min < b,
/// no-instances have every eigenvalue above a.
struct PromiseGap {
    double a;
    double b;
    double gap() const {
        return a - b;
    }
};

/// Gap read off brute-force spectra: b = lambda_min(yes), a = lambda_min(no).
/// Throws std::domain_error when a - b is not positive.
PromiseGap promise_gap(const XZHamiltonian &yes_instance, const XZHamiltonian &no_instance);

/// The printed three-qubit XZ decomposition of the worked example, for input bit x.
XZHamiltonian example_hamiltonian_xz(int input_bit);

/// a_P = Tr(P M) / 2^n over all 4^n strings, n <= 4. Throws std::invalid_argument on a
/// non-Hermitian input and std::domain_error when a Y component survives.
XZHamiltonian pauli_decompose(const DenseMatrix &m);

/// 1/2 - sum_i a_i <S_i> / (2K). One expectation per term, each within [-1, 1] up to 1e-9.
double acceptance_probability(std::span<const double> coefficients, std::span<const double> expectations);
double acceptance_probability(const XZHamiltonian &h, std::span<const double> expectations);

/// |a_i| / K for every term, including the identity.
std::vector<double> term_distribution(const XZHamiltonian &h);

/// Per-term <S_i> (coefficients stripped).
std::vector<double> term_expectations(const StateVector &state, const XZHamiltonian &h);

}  // namespace posthoc

#endif
