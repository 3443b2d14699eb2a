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

#include "posthoc/ftcalc/ftcalc.h"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "posthoc/common.h"

namespace posthoc {

namespace {

void check_suppression_inputs(double alpha, double eps_m) {
    if (!(alpha > 0.0)) {
        throw std::invalid_argument("alpha must be positive");
    }
    if (!(eps_m > 0.0 && eps_m < 1.0)) {
        throw std::invalid_argument("eps_m must lie in (0,1)");
    }
}

// Slack on log comparisons, so that targets hit exactly in real arithmetic (0.1^2 vs 0.01) are
// not lost to rounding.
constexpr double kLogSlack = 1e-12;

}  // namespace

double log_suppressed_error(double alpha, double eps_m, int k) {
    check_suppression_inputs(alpha, eps_m);
    if (k < 0 || k > 1000) {
        throw std::invalid_argument("concatenation level out of range");
    }
    const double two_k = std::ldexp(1.0, k);
    return (two_k - 1.0) * std::log(alpha) + two_k * std::log(eps_m);
}

double suppressed_error(double alpha, double eps_m, int k) {
    const double log_value = log_suppressed_error(alpha, eps_m, k);
    if (k == 0) {
        return eps_m;
    }
    const double two_k = std::ldexp(1.0, k);
    const double direct = std::pow(alpha, two_k - 1.0) * std::pow(eps_m, two_k);
    if (std::isfinite(direct) && direct > std::numeric_limits<double>::min()) {
        return direct;
    }
    return std::exp(log_value);
}

int required_levels(double alpha, double eps_m, double eta, double measurements) {
    check_suppression_inputs(alpha, eps_m);
    if (!(eta > 0.0 && eta < 1.0)) {
        throw std::invalid_argument("eta must lie in (0,1)");
    }
    if (!(measurements > 0.0)) {
        throw std::invalid_argument("measurement count must be positive");
    }
    if (alpha * eps_m >= 1.0) {
        throw std::domain_error("alpha * eps_m >= 1: above threshold, no concatenation depth suffices");
    }
    const double target = std::log(eta / measurements);
    for (int k = 0; k <= 1000; k++) {
        if (log_suppressed_error(alpha, eps_m, k) <= target + kLogSlack * std::max(1.0, std::abs(target))) {
            return k;
        }
    }
    throw GuardError("required concatenation depth exceeds 1000");
}

int64_t qubit_overhead(int block_size, int levels, int64_t n) {
    if (block_size < 3 || levels < 0 || n < 1) {
        throw std::invalid_argument("qubit_overhead needs b >= 3, k >= 0, n >= 1");
    }
    int64_t total = n;
    for (int i = 0; i < levels; i++) {
        if (total > std::numeric_limits<int64_t>::max() / block_size) {
            throw GuardError("qubit count overflows 64 bits");
        }
        total *= block_size;
    }
    return total;
}

OverheadCheck overhead_identity_check(double alpha, double eps_m, double eta, int block_size, int levels) {
    check_suppression_inputs(alpha, eps_m);
    if (alpha * eps_m >= 1.0 || alpha * eta >= 2.0) {
        throw std::domain_error("overhead identity needs alpha*eps < 1 and alpha*eta < 2");
    }
    const double ratio = std::log(2.0 / (alpha * eta)) / std::log(1.0 / (alpha * eps_m));
    OverheadCheck c{};
    c.exact = std::pow(static_cast<double>(block_size), levels);
    c.asymptotic = std::pow(ratio, std::log2(static_cast<double>(block_size)));
    c.continuous_levels = std::log2(ratio);
    c.relative_error = std::abs(c.exact - c.asymptotic) / c.asymptotic;
    c.within_10_percent = c.relative_error <= 0.10;
    return c;
}

GapShift gap_shift(double p_acc, double p_rej, double eta) {
    for (double v : {p_acc, p_rej, eta}) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw std::invalid_argument("gap_shift inputs must lie in [0,1]");
        }
    }
    GapShift g{p_acc, p_rej, eta, p_acc - eta, p_rej + eta, false};
    g.gap_maintained = g.shifted_acc > g.shifted_rej;
    return g;
}

}  // namespace posthoc
