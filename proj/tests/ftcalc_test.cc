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

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "posthoc/common.h"
#include "posthoc/ftcalc/ftcalc.h"

using namespace posthoc;

namespace {

struct Draw {
    double alpha;
    double eps;
    double eta;
};

// Below-threshold parameters: alpha * eps < 0.99 and eps < 1.
Draw below_threshold(Rng &rng) {
    const double alpha = 0.5 + 4.5 * unit_uniform(rng);
    const double eps = (1e-4 + (0.99 - 1e-4) * unit_uniform(rng)) / std::max(alpha, 1.0);
    const double eta = std::pow(10.0, -9 + 8.7 * unit_uniform(rng));
    return {alpha, eps, eta};
}

}  // namespace

TEST(suppressed_error, examples) {
    EXPECT_NEAR(suppressed_error(1, 0.1, 2), 1e-4, 1e-18);
    EXPECT_NEAR(suppressed_error(2, 0.1, 1), 0.02, 1e-17);
    for (double alpha : {0.5, 3.0, 40.0}) {
        EXPECT_EQ(suppressed_error(alpha, 0.37, 0), 0.37);
    }
}

TEST(suppressed_error, log_space_survives_underflow) {
    EXPECT_EQ(suppressed_error(1, 0.1, 12), 0.0);
    EXPECT_NEAR(log_suppressed_error(1, 0.1, 12), 4096 * std::log(0.1), 1e-9);
    EXPECT_NEAR(log_suppressed_error(2, 0.1, 3), 7 * std::log(2.0) + 8 * std::log(0.1), 1e-12);
}

TEST(suppressed_error, strictly_decreasing_below_threshold) {
    Rng rng(5);
    for (int i = 0; i < 100; i++) {
        const Draw d = below_threshold(rng);
        for (int k = 0; k < 8; k++) {
            EXPECT_LT(log_suppressed_error(d.alpha, d.eps, k + 1), log_suppressed_error(d.alpha, d.eps, k));
        }
    }
}

TEST(required_levels, examples) {
    EXPECT_EQ(required_levels(1, 0.1, 0.02), 1);
    EXPECT_EQ(required_levels(1, 0.1, 0.5), 0);
    EXPECT_EQ(required_levels(1, 0.3, 1e-6), 4);
}

TEST(required_levels, above_threshold_has_no_depth) {
    EXPECT_THROW(required_levels(10, 0.1, 0.01), std::domain_error);
    EXPECT_THROW(required_levels(20, 0.1, 0.01), std::domain_error);
}

TEST(required_levels, minimal_over_random_draws) {
    Rng rng(6);
    for (int i = 0; i < 100; i++) {
        const Draw d = below_threshold(rng);
        const int k = required_levels(d.alpha, d.eps, d.eta);
        const double target = std::log(d.eta / 2);
        EXPECT_LE(log_suppressed_error(d.alpha, d.eps, k), target + 1e-12 * std::abs(target));
        if (k > 0) {
            EXPECT_GT(log_suppressed_error(d.alpha, d.eps, k - 1), target);
        }
    }
}

TEST(required_levels, non_increasing_in_eta) {
    Rng rng(7);
    for (int i = 0; i < 100; i++) {
        const Draw d = below_threshold(rng);
        int prev = required_levels(d.alpha, d.eps, 1e-12);
        for (double eta = 1e-11; eta < 1; eta *= 10) {
            const int k = required_levels(d.alpha, d.eps, eta);
            EXPECT_LE(k, prev);
            prev = k;
        }
    }
}

TEST(required_levels, measurement_count_parameter) {
    // One measurement: target eta itself.
    EXPECT_EQ(required_levels(1, 0.1, 0.01, 1.0), 1);
    EXPECT_EQ(required_levels(1, 0.1, 0.1, 1.0), 0);
}

TEST(qubit_overhead, examples) {
    EXPECT_EQ(qubit_overhead(7, 1, 3), 21);
    EXPECT_EQ(qubit_overhead(3, 0, 5), 5);
    EXPECT_EQ(qubit_overhead(3, 2, 3), 27);
    EXPECT_THROW(qubit_overhead(2, 1, 3), std::invalid_argument);
    EXPECT_THROW(qubit_overhead(7, 30, 3), GuardError);
}

TEST(qubit_overhead, integer_depth_brackets_the_asymptotic_form) {
    // k = ceil(log2 R), so R^(log2 b) <= b^k < b * R^(log2 b).
    Rng rng(8);
    for (int i = 0; i < 100; i++) {
        const Draw d = below_threshold(rng);
        const int k = required_levels(d.alpha, d.eps, d.eta);
        for (int b : {3, 7}) {
            const OverheadCheck c = overhead_identity_check(d.alpha, d.eps, d.eta, b, k);
            if (c.continuous_levels <= 0) {
                continue;
            }
            EXPECT_GE(c.exact, c.asymptotic * (1 - 1e-9));
            EXPECT_LT(c.exact, b * c.asymptotic * (1 + 1e-9));
        }
    }
}

TEST(qubit_overhead, asymptotic_form_is_exact_at_continuous_depth) {
    const OverheadCheck c = overhead_identity_check(1, 0.1, 1e-6, 7, 2);
    const double r = std::log(2 / 1e-6) / std::log(10.0);
    EXPECT_NEAR(c.continuous_levels, std::log2(r), 1e-12);
    EXPECT_NEAR(c.asymptotic, std::pow(7.0, std::log2(r)), 1e-9);
}

TEST(qubit_overhead, asymptotic_identity_within_ten_percent_at_required_levels) {
    Rng rng(9);
    int checked = 0;
    int passed = 0;
    for (int i = 0; checked < 100 && i < 10000; i++) {
        const Draw d = below_threshold(rng);
        const int k = required_levels(d.alpha, d.eps, d.eta);
        if (k < 2) {
            continue;
        }
        checked++;
        passed += overhead_identity_check(d.alpha, d.eps, d.eta, 7, k).within_10_percent;
    }
    ASSERT_EQ(checked, 100);
    EXPECT_EQ(passed, checked);
}

TEST(gap_shift, examples) {
    GapShift g = gap_shift(0.6, 0.4, 0.05);
    EXPECT_NEAR(g.shifted_acc, 0.55, 1e-15);
    EXPECT_NEAR(g.shifted_rej, 0.45, 1e-15);
    EXPECT_TRUE(g.gap_maintained);
    g = gap_shift(0.6, 0.4, 0.1);
    EXPECT_NEAR(g.shifted_acc, 0.5, 1e-15);
    EXPECT_NEAR(g.shifted_rej, 0.5, 1e-15);
    EXPECT_FALSE(g.gap_maintained);
    EXPECT_THROW(gap_shift(1.2, 0.4, 0.1), std::invalid_argument);
}

TEST(gap_shift, example_instance) {
    // Honest acceptance against the soundness bound of the example leaves a 0.0037 gap.
    const double eta = 1e-3;
    const int k = required_levels(1, 0.01, eta);
    EXPECT_EQ(k, 1);
    EXPECT_FALSE(gap_shift(0.4949219914, 0.4986660503, eta).gap_maintained);
}
