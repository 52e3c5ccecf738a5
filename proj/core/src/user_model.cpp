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

#include "drsa/user_model.hpp"

#include <cmath>
#include <string>

#include "drsa/errors.hpp"
#include "drsa/random.hpp"

namespace drsa {

std::string_view to_string(GeneralAwareness level) {
  return level == GeneralAwareness::kLow ? "Low" : "High";
}

std::optional<GeneralAwareness> parse_general_awareness(std::string_view text) {
  if (text == "Low") return GeneralAwareness::kLow;
  if (text == "High") return GeneralAwareness::kHigh;
  return std::nullopt;
}

UserProfile sample_user_profile(double critical_awareness_prob,
                                GeneralAwareness general_awareness,
                                std::span<const PropertyId> scheduled, std::uint64_t seed) {
  if (!(critical_awareness_prob >= 0.0 && critical_awareness_prob <= 1.0))
    throw ValidationError("awareness probability must be in [0, 1]");
  UserProfile profile;
  profile.critical_awareness_prob = critical_awareness_prob;
  profile.general_awareness = general_awareness;
  profile.seed = seed;
  Rng rng(seed);
  std::bernoulli_distribution aware(critical_awareness_prob);
  for (PropertyId p : scheduled) profile.aware_flags[p] = aware(rng);
  return profile;
}

GeneralAwarenessNoise noise_for(GeneralAwareness level) {
  if (level == GeneralAwareness::kHigh) return {0.05, 0.05, 0.9};
  return {0.30, 0.30, 0.6};
}

namespace {

void anchored(std::span<double> row, ValueIndex anchor) {
  const double rest = (1.0 - kAnchorMass) / static_cast<double>(row.size());
  for (double& x : row) x = rest;
  row[static_cast<std::size_t>(anchor)] += kAnchorMass;
}

}  // namespace

BeliefState initial_beliefs(const WorldScenario& scenario, const UserProfile& profile,
                            const PropertySpace& space) {
  if (profile.aware_flags.size() != scenario.onsets.size())
    throw ValidationError("profile flags do not match the scheduled properties");
  for (const auto& [p, onset] : scenario.onsets)
    if (!profile.aware_flags.contains(p))
      throw ValidationError("profile has no awareness flag for " + space.property(p).label);

  Rng rng(mix_seed(profile.seed, SeedStream::kBeliefs));
  const auto noise = noise_for(profile.general_awareness);
  BeliefState belief = BeliefState::zeros(space);

  for (std::size_t i = 0; i < space.size(); ++i) {
    const PropertyId p{i};
    auto row = belief[p];
    const auto& prop = space.property(p);

    if (const auto onset = scenario.onset(p)) {
      if (profile.aware_flags.at(p)) {
        anchored(row, scenario.value(*onset, p));
      } else {
        const auto safe = space.non_critical_values(p);
        std::uniform_int_distribution<std::size_t> pick(0, safe.size() - 1);
        anchored(row, safe[pick(rng)]);
      }
      continue;
    }

    const ValueIndex truth = scenario.value(1, p);
    if (row.size() == 2) {
      row[static_cast<std::size_t>(truth)] = noise.binary_correct;
      row[static_cast<std::size_t>(1 - truth)] = 1.0 - noise.binary_correct;
      continue;
    }
    std::uniform_real_distribution<double> offset(-noise.mean_offset, noise.mean_offset);
    const double mean = prop.values[static_cast<std::size_t>(truth)] + offset(rng);
    double total = 0.0;
    for (std::size_t v = 0; v < row.size(); ++v) {
      const double z = (prop.values[v] - mean) / noise.sigma;
      row[v] = std::exp(-0.5 * z * z);
      total += row[v];
    }
    for (double& x : row) x /= total;
  }
  return belief;
}

}  // namespace drsa
