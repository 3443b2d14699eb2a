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

#include "posthoc/clockham/builder.h"

#include <cmath>

namespace posthoc {

namespace {

// Real 2x2 site operators used by the projector expressions.
constexpr Matrix2 kP0{Complex{1}, Complex{0}, Complex{0}, Complex{0}};
constexpr Matrix2 kP1{Complex{0}, Complex{0}, Complex{0}, Complex{1}};

struct Site {
    int qubit;
    Matrix2 op;
};

// coefficient * tensor product of `sites` (identity elsewhere), Pauli-expanded.
class Expander {
  public:
    explicit Expander(int num_qubits) : n_(num_qubits) {
    }

    void add(double coefficient, const std::vector<Site> &sites) {
        PauliSum acc{PauliString::identity(n_, coefficient)};
        for (const auto &site : sites) {
            const auto &m = site.op;
            if (std::abs(m[0].imag()) + std::abs(m[1].imag()) + std::abs(m[2].imag()) + std::abs(m[3].imag()) > 1e-12 ||
                std::abs(m[1].real() - m[2].real()) > 1e-12) {
                throw std::invalid_argument("site operator has a Y component; gate outside the supported set");
            }
            const std::pair<Pauli, double> parts[] = {
                {Pauli::I, (m[0].real() + m[3].real()) / 2},
                {Pauli::Z, (m[0].real() - m[3].real()) / 2},
                {Pauli::X, (m[1].real() + m[2].real()) / 2},
            };
            PauliSum next;
            for (const auto &t : acc) {
                for (const auto &[p, c] : parts) {
                    if (std::abs(c) < kCoefficientPruning) {
                        continue;
                    }
                    auto s = t.sites();
                    s[site.qubit] = p;
                    next.emplace_back(std::move(s), t.coefficient() * c);
                }
            }
            acc = std::move(next);
        }
        out_.insert(out_.end(), acc.begin(), acc.end());
    }

    PauliSum take() {
        return std::move(out_);
    }

  private:
    int n_;
    PauliSum out_;
};

}  // namespace

PauliSum ComponentTerms::all() const {
    PauliSum merged;
    for (const PauliSum *part : {&in, &clock, &prop, &out}) {
        merged.insert(merged.end(), part->begin(), part->end());
    }
    return merged;
}

ComponentTerms build_component_terms(const Circuit &c, bool claimed_accept) {
    const int T = c.steps();
    const int n = 1 + T;
    auto clk = [](int t) { return t; };  // clock qubit c_t sits at register index t
    ComponentTerms parts;

    {
        Expander e(n);
        e.add(1.0, {{0, c.input_bit() == 0 ? kP1 : kP0}, {clk(1), kP0}});
        parts.in = e.take();
    }
    {
        Expander e(n);
        for (int t = 1; t < T; t++) {
            e.add(1.0, {{clk(t), kP0}, {clk(t + 1), kP1}});
        }
        parts.clock = e.take();
    }
    {
        Expander e(n);
        for (int t = 1; t <= T; t++) {
            const Matrix2 u = c.gates()[t - 1].matrix();
            if (T == 1) {
                e.add(0.5, {});
                e.add(-0.5, {{0, u}, {clk(1), gates::X}});
            } else if (t == 1) {
                e.add(0.5, {{clk(1), kP0}});
                e.add(-0.5, {{0, u}, {clk(1), gates::X}});
                e.add(0.5, {{clk(1), kP1}, {clk(2), kP0}});
            } else if (t == T) {
                e.add(0.5, {{clk(T), kP1}});
                e.add(-0.5, {{0, u}, {clk(T), gates::X}});
                e.add(0.5, {{clk(T - 1), kP1}, {clk(T), kP0}});
            } else {
                e.add(0.5, {{clk(t - 1), kP1}, {clk(t), kP0}});
                e.add(0.5, {{clk(t), kP1}, {clk(t + 1), kP0}});
                e.add(-0.5, {{0, u}, {clk(t - 1), kP1}, {clk(t), gates::X}, {clk(t + 1), kP0}});
            }
        }
        parts.prop = e.take();
    }
    {
        Expander e(n);
        e.add(1.0, {{0, claimed_accept ? kP0 : kP1}, {clk(T), kP1}});
        parts.out = e.take();
    }
    return parts;
}

XZHamiltonian build_component_hamiltonian(const Circuit &c, bool claimed_accept) {
    return XZHamiltonian(1 + c.steps(), build_component_terms(c, claimed_accept).all());
}

}  // namespace posthoc
