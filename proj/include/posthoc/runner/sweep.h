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

#ifndef POSTHOC_RUNNER_SWEEP_H
#define POSTHOC_RUNNER_SWEEP_H

#include <stdexcept>
#include <string_view>
#include <vector>

#include "posthoc/runner/config.h"

namespace posthoc {

enum class Variant : uint8_t { encoded, unencoded };
std::string_view variant_name(Variant v);

struct SweepRow {
    double p;
    Variant variant;
    double estimate;
    double ci_low;
    double ci_high;
    /// 0 for exact rows.
    int64_t reps;
    uint64_t seed;
};

struct SweepResult {
    std::vector<double> grid;
    /// Encoded then unencoded for each grid point, in grid order.
    std::vector<SweepRow> rows;

    std::vector<double> estimates(Variant v) const;
    /// encoded - unencoded per grid point.
    std::vector<double> difference() const;
};

/// Seed used for grid point `index` and `variant` of a sweep with master seed `seed`.
uint64_t point_seed(uint64_t seed, size_t index, Variant variant);

/// Encoded acceptance per the configured mode; the unencoded variant is always the
/// exact Heisenberg value on the bare history state.
SweepResult run_sweep(const SweepConfig &cfg);

struct NoCrossover : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Crossover {
    double p;
    /// Grid points bracketing the first crossing.
    double lo;
    double hi;
    /// More than one sign change; `p` is the first.
    bool ambiguous;
    std::vector<double> all;
};

/// Differences within this of zero count as zero.
inline constexpr double kCrossoverZero = 1e-12;

/// Zeros of the difference curve by linear interpolation between bracketing points.
/// A zero sitting on a grid point between opposite signs is reported at that point; zeros
/// at the ends of the grid are not crossings. Throws NoCrossover without a sign change.
Crossover crossover(const std::vector<double> &grid, const std::vector<double> &difference);
Crossover crossover(const SweepResult &result);

}  // namespace posthoc

#endif
