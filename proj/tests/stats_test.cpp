// Copyright 2026 The drsa Authors
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

#include "drsa/stats.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

namespace drsa::stats {
namespace {

TEST(StatsTest, Moments) {
  const std::vector<double> xs = {1, 2, 3, 4};
  EXPECT_DOUBLE_EQ(mean(xs), 2.5);
  EXPECT_NEAR(standard_error(xs), std::sqrt(5.0 / 3.0) / 2.0, 1e-12);
  EXPECT_EQ(standard_error(std::vector<double>{3.0}), 0.0);
  EXPECT_DOUBLE_EQ(median({5, 1, 3}), 3.0);
  EXPECT_DOUBLE_EQ(median({4, 1, 3, 2}), 2.5);
}

TEST(StatsTest, BootstrapCoversShiftedMean) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> noise(0.5, 1.0);
  std::vector<double> xs(400);
  for (double& x : xs) x = noise(rng);
  const auto ci = bootstrap_mean_ci(xs, 3);
  EXPECT_LT(ci.lower, mean(xs));
  EXPECT_GT(ci.upper, mean(xs));
  EXPECT_TRUE(ci.above_zero());
  EXPECT_FALSE(ci.contains_zero());
  const auto again = bootstrap_mean_ci(xs, 3);
  EXPECT_EQ(ci.lower, again.lower);
  EXPECT_EQ(ci.upper, again.upper);
}

TEST(StatsTest, BootstrapDifference) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> a_dist(1.0, 1.0), b_dist(0.0, 1.0);
  std::vector<double> a(300), b(300);
  for (double& x : a) x = a_dist(rng);
  for (double& x : b) x = b_dist(rng);
  EXPECT_TRUE(bootstrap_mean_difference_ci(a, b, 4).above_zero());
  EXPECT_TRUE(bootstrap_mean_difference_ci(b, a, 4).below_zero());
  EXPECT_TRUE(bootstrap_mean_difference_ci(a, a, 4).contains_zero());
}

}  // namespace
}  // namespace drsa::stats
