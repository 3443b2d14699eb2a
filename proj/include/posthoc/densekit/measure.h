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

#ifndef POSTHOC_DENSEKIT_MEASURE_H
#define POSTHOC_DENSEKIT_MEASURE_H

#include <vector>

#include "posthoc/densekit/product_observable.h"

namespace posthoc {

struct ProductMeasurement {
    /// One +-1 outcome per factor, in factor order.
    std::vector<int> outcomes;
    StateVector collapsed;
};

/// Samples every factor of `obs` by the Born rule, collapsing after each factor.
/// Identity factors return +1 without consuming randomness.
ProductMeasurement measure_product(const StateVector &state, const ProductObservable &obs, Rng &rng);

}  // namespace posthoc

#endif
