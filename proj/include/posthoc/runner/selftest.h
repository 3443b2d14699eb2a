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

#ifndef POSTHOC_RUNNER_SELFTEST_H
#define POSTHOC_RUNNER_SELFTEST_H

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace posthoc {

struct GoldenCheck {
    std::string name;
    double value;
    double expected;
    double tolerance;
    bool passed;
};

/// Reference values of the worked example and small deterministic campaigns. Sampled
/// checks are seeded from `seed`; results do not depend on `threads`.
std::vector<GoldenCheck> run_selftest(int threads = 1, uint64_t seed = 2024);

/// Header name,value,expected,tolerance,status.
void write_selftest_csv(const std::vector<GoldenCheck> &checks, std::ostream &out);

}  // namespace posthoc

#endif
