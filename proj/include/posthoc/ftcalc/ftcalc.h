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

#ifndef POSTHOC_FTCALC_FTCALC_H
#define POSTHOC_FTCALC_FTCALC_H

#include <cstdint>

namespace posthoc {

struct FtParams {
    double alpha;
    double eps_m;
    double eta;
    int block_size;
    int levels;
};

struct GapShift {
    double p_acc;
    double p_rej;
    double eta;
    double shifted_acc;
    double shifted_rej;
    bool gap_maintained;
};

/// alpha^(2^k - 1) * eps^(2^k). k = 0 returns eps itself.
double suppressed_error(double alpha, double eps_m, int k);
/// Natural log of suppressed_error, finite for any k.
double log_suppressed_error(double alpha, double eps_m, int k);

/// Smallest k with suppressed_error <= eta / measurements. Throws std::domain_error when
/// alpha * eps_m >= 1, since no depth reaches a target then.
int required_levels(double alpha, double eps_m, double eta, double measurements = 2.0);

/// n * b^k. Throws GuardError past int64.
int64_t qubit_overhead(int block_size, int levels, int64_t n);

/// Compares b^k with R^(log2 b), R = log(2/(alpha eta)) / log(1/(alpha eps)).
/// The two agree exactly at the continuous depth log2 R; at integer k their ratio is
/// b^(k - log2 R).
struct OverheadCheck {
    double exact;       // b^k
    double asymptotic;  // R^(log2 b)
    double continuous_levels;
    double relative_error;
    bool within_10_percent;
};
OverheadCheck overhead_identity_check(double alpha, double eps_m, double eta, int block_size, int levels);

GapShift gap_shift(double p_acc, double p_rej, double eta);

}  // namespace posthoc

#endif
