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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "drsa/random.hpp"

namespace drsa::stats {

double mean(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("mean of an empty sample");
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double standard_error(std::span<const double> xs) {
  if (xs.size() < 2) return 0.0;
  const double m = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  const double n = static_cast<double>(xs.size());
  return std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
}

double median(std::vector<double> xs) {
  if (xs.empty()) throw std::invalid_argument("median of an empty sample");
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 == 1 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

namespace {

double resampled_mean(std::span<const double> xs, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, xs.size() - 1);
  double total = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) total += xs[pick(rng)];
  return total / static_cast<double>(xs.size());
}

Interval percentile_interval(std::vector<double> draws, double level) {
  std::sort(draws.begin(), draws.end());
  const double tail = (1.0 - level) / 2.0;
  const auto index = [&](double q) {
    const double pos = q * static_cast<double>(draws.size() - 1);
    return draws[static_cast<std::size_t>(std::lround(pos))];
  };
  return {index(tail), index(1.0 - tail)};
}

}  // namespace

Interval bootstrap_mean_ci(std::span<const double> xs, std::uint64_t seed, int resamples,
                           double level) {
  if (xs.empty()) throw std::invalid_argument("bootstrap of an empty sample");
  Rng rng(seed);
  std::vector<double> draws(static_cast<std::size_t>(resamples));
  for (double& d : draws) d = resampled_mean(xs, rng);
  return percentile_interval(std::move(draws), level);
}

Interval bootstrap_mean_difference_ci(std::span<const double> a, std::span<const double> b,
                                      std::uint64_t seed, int resamples, double level) {
  if (a.empty() || b.empty()) throw std::invalid_argument("bootstrap of an empty sample");
  Rng rng(seed);
  std::vector<double> draws(static_cast<std::size_t>(resamples));
  for (double& d : draws) d = resampled_mean(a, rng) - resampled_mean(b, rng);
  return percentile_interval(std::move(draws), level);
}

}  // namespace drsa::stats
