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

#ifndef POSTHOC_RUNNER_OUTPUT_H
#define POSTHOC_RUNNER_OUTPUT_H

#include <ostream>
#include <string>

#include "posthoc/runner/sweep.h"

namespace posthoc {

/// Header p,variant,estimate,ci_low,ci_high,reps,seed; reals at 10 significant digits.
void write_csv(const SweepResult &result, std::ostream &out);
std::string to_csv(const SweepResult &result);

/// Whitespace columns for gnuplot: p, encoded estimate and bounds, unencoded estimate
/// and bounds.
void write_gnuplot(const SweepResult &result, std::ostream &out);

/// Standalone SVG of both curves with error bars.
void write_svg(const SweepResult &result, const std::string &title, std::ostream &out);

/// %.10g.
std::string format_real(double v);

}  // namespace posthoc

#endif
