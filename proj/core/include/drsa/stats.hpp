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

#ifndef DRSA_STATS_HPP_
#define DRSA_STATS_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace drsa::stats {

double mean(std::span<const double> xs);
// Standard error of the mean; 0 for fewer than two samples.
double standard_error(std::span<const double> xs);
// Mean of the two middle elements for even sizes. Requires a non-empty input.
double median(std::vector<double> xs);

struct Interval {
  double lower = 0.0;
  double upper = 0.0;

  bool above_zero() const { return lower > 0.0; }
  bool below_zero() const { return upper < 0.0; }
  bool contains_zero() const { return lower <= 0.0 && upper >= 0.0; }
};

inline constexpr int kDefaultResamples = 4000;

// Percentile bootstrap CI for the mean.
Interval bootstrap_mean_ci(std::span<const double> xs, std::uint64_t seed,
                           int resamples = kDefaultResamples, double level = 0.95);

// Percentile bootstrap CI for mean(a) - mean(b), resampling each group
// independently.
Interval bootstrap_mean_difference_ci(std::span<const double> a, std::span<const double> b,
                                      std::uint64_t seed, int resamples = kDefaultResamples,
                                      double level = 0.95);

}  // namespace drsa::stats

#endif  // DRSA_STATS_HPP_
