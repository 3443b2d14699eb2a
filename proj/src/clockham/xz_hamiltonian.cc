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

#include "posthoc/clockham/xz_hamiltonian.h"

#include <bit>
#include <cmath>
#include <map>
#include <numbers>

namespace posthoc {

XZHamiltonian::XZHamiltonian(int num_qubits, const PauliSum &terms) : num_qubits_(num_qubits), k_(0) {
    std::map<std::vector<Pauli>, size_t> index;
    for (const auto &t : terms) {
        if (t.num_qubits() != num_qubits) {
            throw std::invalid_argument("term " + t.str() + " does not act on " + std::to_string(num_qubits) +
                                        " qubits");
        }
        if (!t.is_xz()) {
            throw std::invalid_argument("term " + t.str() + " has a Y site; XZ-Hamiltonians use I, X, Z only");
        }
        auto [it, inserted] = index.try_emplace(t.sites(), terms_.size());
        if (inserted) {
            terms_.push_back(t);
        } else {
            auto &slot = terms_[it->second];
            slot = slot.with_coefficient(slot.coefficient() + t.coefficient());
        }
    }
    std::erase_if(terms_, [](const PauliString &t) { return std::abs(t.coefficient()) < kCoefficientPruning; });
    for (const auto &t : terms_) {
        k_ += std::abs(t.coefficient());
    }
    if (terms_.empty() || !(k_ > 0)) {
        throw std::invalid_argument("XZ-Hamiltonian has no surviving terms");
    }
}

std::optional<double> XZHamiltonian::coefficient_of(std::string_view paulis) const {
    PauliString probe = PauliString::from_str(paulis);
    for (const auto &t : terms_) {
        if (t.same_sites(probe)) {
            return t.coefficient();
        }
    }
    return std::nullopt;
}

DenseMatrix XZHamiltonian::dense() const {
    return to_dense(terms_, num_qubits_);
}

PromiseGap promise_gap(const XZHamiltonian &yes_instance, const XZHamiltonian &no_instance) {
    PromiseGap g{eigs_dense(no_instance.dense()).front(), eigs_dense(yes_instance.dense()).front()};
    if (!(g.gap() > 0)) {
        throw std::domain_error("no positive promise gap between the two instances");
    }
    return g;
}

XZHamiltonian example_hamiltonian_xz(int input_bit) {
    if (input_bit != 0 && input_bit != 1) {
        throw std::invalid_argument("input bit must be 0 or 1");
    }
    const double sign = input_bit == 0 ? 1.0 : -1.0;  // (-1)^x
    const double s = std::sin(std::numbers::pi / 8);
    const double c = std::cos(std::numbers::pi / 8);
    PauliSum terms{
        PauliString::from_str("III", 7.0 / 4),
        PauliString::from_str("ZII", 0.25 * (1 - sign)),
        PauliString::from_str("ZZI", -0.25 * sign),
        PauliString::from_str("IZZ", -0.25),
        PauliString::from_str("XXI", -0.5),
        PauliString::from_str("XXZ", -0.5),
        PauliString::from_str("XIX", -0.5 * s),
        PauliString::from_str("XZX", 0.5 * s),
        PauliString::from_str("ZIX", -0.5 * c),
        PauliString::from_str("ZZX", 0.5 * c),
        PauliString::from_str("ZIZ", -0.25),
    };
    return XZHamiltonian(3, terms);
}

XZHamiltonian pauli_decompose(const DenseMatrix &m) {
    const auto dim = static_cast<size_t>(m.rows());
    if (m.rows() != m.cols() || dim < 2 || (dim & (dim - 1)) != 0) {
        throw std::invalid_argument("pauli_decompose needs a 2^n x 2^n matrix");
    }
    const int n = std::countr_zero(dim);
    if (n > 4) {
        throw GuardError("pauli_decompose is limited to 4 qubits");
    }
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
        throw std::invalid_argument("matrix is not Hermitian");
    }
    PauliSum terms;
    const size_t count = size_t{1} << (2 * n);
    for (size_t code = 0; code < count; code++) {
        std::vector<Pauli> sites(n);
        for (int q = 0; q < n; q++) {
            sites[q] = static_cast<Pauli>((code >> (2 * (n - 1 - q))) & 3);
        }
        PauliString p(sites);
        // Tr(P M) = sum_c P[c^x, c] M[c, c^x].
        const uint64_t x = p.x_mask();
        const uint64_t z = p.z_mask();
        Complex phase{1};
        for (int k = 0; k < p.y_weight(); k++) {
            phase *= Complex{0, 1};
        }
        Complex tr{0};
        for (size_t col = 0; col < dim; col++) {
            double sign = (std::popcount(col & z) & 1) ? -1.0 : 1.0;
            tr += phase * sign * m(col, col ^ x);
        }
        double a = tr.real() / static_cast<double>(dim);
        if (std::abs(a) < kCoefficientPruning) {
            continue;
        }
        if (!p.is_xz()) {
            throw std::domain_error("unexpected Y component " + p.str());
        }
        terms.push_back(p.with_coefficient(a));
    }
    return XZHamiltonian(n, terms);
}

double acceptance_probability(std::span<const double> coefficients, std::span<const double> expectations) {
    if (coefficients.size() != expectations.size()) {
        throw std::invalid_argument("need one expectation value per term");
    }
    double k = 0;
    double energy = 0;
    for (size_t i = 0; i < coefficients.size(); i++) {
        if (!(std::abs(expectations[i]) <= 1 + 1e-9)) {
            throw std::domain_error("term expectation " + std::to_string(expectations[i]) + " outside [-1, 1]");
        }
        k += std::abs(coefficients[i]);
        energy += coefficients[i] * expectations[i];
    }
    if (!(k > 0)) {
        throw std::invalid_argument("empty Hamiltonian");
    }
    return 0.5 - energy / (2 * k);
}

double acceptance_probability(const XZHamiltonian &h, std::span<const double> expectations) {
    std::vector<double> coeffs;
    coeffs.reserve(h.size());
    for (const auto &t : h.terms()) {
        coeffs.push_back(t.coefficient());
    }
    return acceptance_probability(coeffs, expectations);
}

std::vector<double> term_distribution(const XZHamiltonian &h) {
    std::vector<double> out;
    out.reserve(h.size());
    for (const auto &t : h.terms()) {
        out.push_back(std::abs(t.coefficient()) / h.K());
    }
    return out;
}

std::vector<double> term_expectations(const StateVector &state, const XZHamiltonian &h) {
    std::vector<double> out;
    out.reserve(h.size());
    for (const auto &t : h.terms()) {
        out.push_back(expectation(state, t.with_coefficient(1.0)));
    }
    return out;
}

}  // namespace posthoc
