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

#include "posthoc/noise/monte_carlo.h"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "posthoc/clockham/xz_hamiltonian.h"

namespace posthoc {

namespace {

// Outcome probabilities below this (relative to the norm) are dropped from a frame.
// The discarded mass is far below any tolerance used downstream.
constexpr double kFrameCutoff = 1e-24;

}  // namespace

FrameEvaluator::FrameEvaluator(const StateVector &state, const EncodedHamiltonian &h)
    : num_qubits_(state.num_qubits()), h_(h) {
    if (state.num_qubits() != h.num_physical()) {
        throw std::invalid_argument("state does not match the encoded register");
    }
    const int n = num_qubits_;
    for (size_t i = 0; i < h_.terms.size(); i++) {
        const auto &obs = h_.terms[i].observable;
        uint64_t xb = 0;
        uint64_t yb = 0;
        std::vector<Factor> factors;
        for (const auto &f : obs.factors()) {
            if (f.is_identity()) {
                continue;
            }
            for (int q = f.first_qubit(); q < f.first_qubit() + f.num_qubits(); q++) {
                const uint64_t bit = uint64_t{1} << bit_position(n, q);
                if (f.basis() == MeasureBasis::X) {
                    xb |= bit;
                } else if (f.basis() == MeasureBasis::Y) {
                    yb |= bit;
                }
            }
            factors.push_back({n - f.first_qubit() - f.num_qubits(), (uint32_t{1} << f.num_qubits()) - 1, &f.signs()});
        }
        identity_.push_back(factors.empty());
        factors_.push_back(std::move(factors));
        if (identity_.back()) {
            continue;
        }
        size_t k = 0;
        while (k < frames_.size() && !(frames_[k].x_basis == xb && frames_[k].y_basis == yb)) {
            k++;
        }
        if (k == frames_.size()) {
            frames_.push_back({xb, yb, {}, {}, {}});
        }
        frames_[k].terms.push_back(static_cast<int>(i));
    }

    const double norm2 = state.norm() * state.norm();
    for (auto &frame : frames_) {
        std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
        for (int q = 0; q < n; q++) {
            const uint64_t bit = uint64_t{1} << bit_position(n, q);
            if (frame.x_basis & bit) {
                kernels::rotate_to_basis(amps, n, q, MeasureBasis::X);
            } else if (frame.y_basis & bit) {
                kernels::rotate_to_basis(amps, n, q, MeasureBasis::Y);
            }
        }
        for (size_t b = 0; b < amps.size(); b++) {
            const double p = std::norm(amps[b]);
            if (p > kFrameCutoff * norm2) {
                frame.outcomes.push_back(b);
                frame.probs.push_back(p);
            }
        }
    }
}

std::vector<double> FrameEvaluator::term_expectations(const PauliString &error) const {
    if (error.num_qubits() != num_qubits_) {
        throw std::invalid_argument("error string does not match the register");
    }
    const uint64_t ex = error.x_mask();
    const uint64_t ez = error.z_mask();
    std::vector<double> out(h_.terms.size(), 1.0);
    for (const auto &frame : frames_) {
        const uint64_t zb = ~(frame.x_basis | frame.y_basis);
        const uint64_t flip = (ex & zb) | (ez & frame.x_basis) | ((ex ^ ez) & frame.y_basis);
        for (int t : frame.terms) {
            const auto &factors = factors_[t];
            double v = 0;
            for (size_t k = 0; k < frame.outcomes.size(); k++) {
                const uint64_t bits = frame.outcomes[k] ^ flip;
                int sign = 1;
                for (const auto &f : factors) {
                    sign *= (*f.signs)[(bits >> f.shift) & f.mask];
                }
                v += sign * frame.probs[k];
            }
            out[t] = v;
        }
    }
    return out;
}

void parallel_for(int64_t count, int threads, const std::function<void(int64_t)> &body) {
    if (threads <= 1 || count <= 1) {
        for (int64_t i = 0; i < count; i++) {
            body(i);
        }
        return;
    }
    const int workers = static_cast<int>(std::min<int64_t>(threads, count));
    std::atomic<int64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; w++) {
        pool.emplace_back([&] {
            for (int64_t i = next++; i < count; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                    next = count;
                }
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

NoisyEstimate mc_noisy_acceptance(const StateVector &s, const EncodedHamiltonian &h, const PauliChannel &ch,
                                  int64_t reps, uint64_t seed, int threads, McPath path) {
    if (reps < 1) {
        throw std::invalid_argument("reps must be >= 1");
    }
    const std::vector<double> coeffs = h.coefficients();
    const int n = h.num_physical();
    std::vector<double> values(reps);
    if (path == McPath::frames) {
        const FrameEvaluator ev(s, h);
        parallel_for(reps, threads, [&](int64_t r) {
            Rng rng(derive_seed(seed, static_cast<uint64_t>(r)));
            values[r] = acceptance_probability(coeffs, ev.term_expectations(sample_pauli_error(ch, n, rng)));
        });
    } else {
        if (s.num_qubits() != n) {
            throw std::invalid_argument("state does not match the encoded register");
        }
        parallel_for(reps, threads, [&](int64_t r) {
            Rng rng(derive_seed(seed, static_cast<uint64_t>(r)));
            const StateVector noisy = apply_pauli(s, sample_pauli_error(ch, n, rng));
            values[r] = acceptance_probability(coeffs, term_expectations(noisy, h));
        });
    }
    return summarize(values, seed);
}

}  // namespace posthoc
