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

#include "posthoc/noise/estimate.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace posthoc {

double normal_quantile(double level) {
    if (!(level > 0.0 && level < 1.0)) {
        throw std::invalid_argument("confidence level must lie in (0,1)");
    }
    if (level == 0.95) {
        return 1.96;
    }
    // Bisection on erf(z / sqrt 2) = level.
    double lo = 0.0;
    double hi = 40.0;
    for (int i = 0; i < 200; i++) {
        const double mid = 0.5 * (lo + hi);
        (std::erf(mid / std::sqrt(2.0)) < level ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

Interval confidence_interval(double mean, double stddev, int64_t n, double level, bool clamp_unit) {
    if (n < 1) {
        throw std::invalid_argument("confidence interval needs n >= 1");
    }
    if (n == 1) {
        return {mean, mean};
    }
    const double half = normal_quantile(level) * stddev / std::sqrt(static_cast<double>(n));
    Interval out{mean - half, mean + half};
    if (clamp_unit) {
        out.lo = std::clamp(out.lo, 0.0, 1.0);
        out.hi = std::clamp(out.hi, 0.0, 1.0);
    }
    return out;
}

NoisyEstimate summarize(std::span<const double> samples, uint64_t seed) {
    if (samples.empty()) {
        throw std::invalid_argument("no samples to summarize");
    }
    // Shifted by the first sample: a constant sequence gives that constant and zero spread
    // exactly.
    const double x0 = samples[0];
    const double n = static_cast<double>(samples.size());
    double s1 = 0;
    for (double x : samples) {
        s1 += x - x0;
    }
    const double mean = x0 + s1 / n;
    double ss = 0;
    for (double x : samples) {
        ss += (x - mean) * (x - mean);
    }
    const double stddev = samples.size() > 1 ? std::sqrt(ss / (n - 1)) : 0.0;
    const Interval ci = confidence_interval(mean, stddev, static_cast<int64_t>(samples.size()));
    return {mean, std::min(ci.lo, mean), std::max(ci.hi, mean), static_cast<int64_t>(samples.size()), seed, stddev};
}

}  // namespace posthoc
