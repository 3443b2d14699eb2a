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

#ifndef POSTHOC_NOISE_ESTIMATE_H
#define POSTHOC_NOISE_ESTIMATE_H

#include <cstdint>
#include <span>

namespace posthoc {

struct NoisyEstimate {
    double mean;
    double ci_low;
    double ci_high;
    int64_t reps;
    uint64_t seed;
    /// Sample standard deviation of the per-rep values.
    double stddev;
};

struct Interval {
    double lo;
    double hi;
};

/// Two-sided standard normal quantile for `level`; 0.95 maps to 1.96 exactly.
double normal_quantile(double level);

/// mean +- z * stddev / sqrt(n). With `clamp_unit` the bounds are clipped to [0,1].
/// n = 1 gives the degenerate interval at the observation.
Interval confidence_interval(double mean, double stddev, int64_t n, double level = 0.95, bool clamp_unit = true);

/// Mean, sample standard deviation and 95% interval of `samples`, reduced in index order.
NoisyEstimate summarize(std::span<const double> samples, uint64_t seed);

}  // namespace posthoc

#endif
