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

#include <gtest/gtest.h>

#include "drsa/errors.hpp"

namespace drsa {
namespace {

WorldScenario scenario_with(double q, GeneralAwareness level, std::uint64_t seed, int count = 4) {
  ScenarioConfig config;
  config.critical_count = count;
  config.dispersion = 1;
  config.first_onset = 1;
  config.awareness_prob = q;
  config.general_awareness = level;
  return generate_scenario(make_drone_world(), config, seed);
}

TEST(UserProfileTest, FlagsCoverScheduledProperties) {
  const auto s = scenario_with(0.5, GeneralAwareness::kHigh, 3);
  ASSERT_EQ(s.profile.aware_flags.size(), s.scheduled.size());
  for (PropertyId p : s.scheduled) EXPECT_TRUE(s.profile.aware_flags.contains(p));
  EXPECT_EQ(sample_user_profile(0.5, GeneralAwareness::kLow, s.scheduled, 17),
            sample_user_profile(0.5, GeneralAwareness::kLow, s.scheduled, 17));
}

TEST(UserProfileTest, AwarenessRateConverges) {
  const std::vector<PropertyId> scheduled = {PropertyId{0}};
  int aware = 0;
  for (std::uint64_t seed = 0; seed < 2000; ++seed)
    aware += sample_user_profile(0.8, GeneralAwareness::kHigh, scheduled, seed)
                 .aware_flags.at(PropertyId{0});
  EXPECT_NEAR(aware / 2000.0, 0.8, 0.05);
}

TEST(InitialBeliefsTest, AwareUserAnticipatesCriticalValue) {
  const auto space = make_drone_world();
  auto s = scenario_with(1.0, GeneralAwareness::kHigh, 8);
  const auto b = initial_beliefs(s, s.profile, space);
  EXPECT_TRUE(b.is_normalized());
  for (PropertyId p : s.scheduled) {
    ASSERT_TRUE(s.profile.aware_flags.at(p));
    const double n = static_cast<double>(space.domain_size(p));
    EXPECT_NEAR(b.at(p, s.value(*s.onset(p), p)), 0.9 + 0.1 / n, 1e-12);
  }
}

TEST(InitialBeliefsTest, UnawareUserMissesCriticalValue) {
  const auto space = make_drone_world();
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto s = scenario_with(0.0, GeneralAwareness::kHigh, seed);
    const auto b = initial_beliefs(s, s.profile, space);
    for (PropertyId p : s.scheduled) {
      ASSERT_FALSE(s.profile.aware_flags.at(p));
      const double n = static_cast<double>(space.domain_size(p));
      for (ValueIndex v : space.critical_values(p)) EXPECT_NEAR(b.at(p, v), 0.1 / n, 1e-12);
    }
  }
}

TEST(InitialBeliefsTest, BinaryPropertiesByGeneralAwareness) {
  const auto space = make_drone_world();
  for (auto [level, expected] : {std::pair{GeneralAwareness::kHigh, 0.9},
                                 std::pair{GeneralAwareness::kLow, 0.6}}) {
    const auto s = scenario_with(0.5, level, 21);
    const auto b = initial_beliefs(s, s.profile, space);
    int checked = 0;
    for (std::size_t i = 0; i < space.size(); ++i) {
      const PropertyId p{i};
      if (space.domain_size(p) != 2 || s.onset(p)) continue;
      EXPECT_NEAR(b.at(p, s.value(1, p)), expected, 1e-12);
      ++checked;
    }
    EXPECT_GT(checked, 0);
  }
}

TEST(InitialBeliefsTest, HighAwarenessIsMoreAccurate) {
  const auto space = make_drone_world();
  double high = 0.0, low = 0.0;
  int n = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto s = scenario_with(0.5, GeneralAwareness::kHigh, seed);
    auto profile = s.profile;
    const auto b_high = initial_beliefs(s, profile, space);
    profile.general_awareness = GeneralAwareness::kLow;
    const auto b_low = initial_beliefs(s, profile, space);
    for (std::size_t i = 0; i < space.size(); ++i) {
      const PropertyId p{i};
      if (s.onset(p)) continue;
      high += b_high.at(p, s.value(1, p));
      low += b_low.at(p, s.value(1, p));
      ++n;
    }
  }
  EXPECT_GT(high / n, low / n);
}

TEST(InitialBeliefsTest, AlwaysNormalizedAndDeterministic) {
  const auto space = make_drone_world();
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto s = scenario_with(0.25 * (seed % 5), seed % 2 ? GeneralAwareness::kHigh
                                                              : GeneralAwareness::kLow,
                                 seed, 2 + static_cast<int>(seed % 3));
    const auto b = initial_beliefs(s, s.profile, space);
    ASSERT_LE(b.normalization_error(), 1e-9);
    for (double x : b.flat()) ASSERT_GE(x, 0.0);
    ASSERT_EQ(b, initial_beliefs(s, s.profile, space));
  }
}

TEST(InitialBeliefsTest, MismatchedProfileIsRejected) {
  const auto space = make_drone_world();
  const auto s = scenario_with(0.5, GeneralAwareness::kHigh, 2);
  auto profile = s.profile;
  profile.aware_flags.erase(profile.aware_flags.begin());
  EXPECT_THROW(initial_beliefs(s, profile, space), ValidationError);
  profile = s.profile;
  PropertyId stranger{0};
  while (s.onset(stranger)) ++stranger.value;
  profile.aware_flags[stranger] = true;
  EXPECT_THROW(initial_beliefs(s, profile, space), ValidationError);
}

TEST(GeneralAwarenessTest, NamesRoundTrip) {
  for (auto level : {GeneralAwareness::kLow, GeneralAwareness::kHigh})
    EXPECT_EQ(parse_general_awareness(to_string(level)), level);
  EXPECT_FALSE(parse_general_awareness("Medium"));
}

}  // namespace
}  // namespace drsa
