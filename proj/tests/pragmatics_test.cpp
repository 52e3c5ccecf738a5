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

#include "drsa/pragmatics.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "drsa/errors.hpp"
#include "oracle.hpp"

namespace drsa {
namespace {

constexpr double kTight = 1e-12;

BeliefState point_masses(const PropertySpace& space, std::span<const ValueIndex> values) {
  auto b = BeliefState::zeros(space);
  for (std::size_t i = 0; i < space.size(); ++i) b[PropertyId{i}][values[i]] = 1.0;
  return b;
}

BeliefState random_belief(const PropertySpace& space, std::mt19937_64& rng) {
  auto b = BeliefState::zeros(space);
  std::gamma_distribution<double> g(0.5, 1.0);
  for (std::size_t i = 0; i < space.size(); ++i) {
    auto row = b[PropertyId{i}];
    for (double& x : row) x = g(rng) + 1e-9;
    const double z = std::accumulate(row.begin(), row.end(), 0.0);
    for (double& x : row) x /= z;
  }
  return b;
}

CriticalityVector no_criticality(const PropertySpace& space) {
  return {std::vector<std::uint8_t>(space.size(), 0)};
}

TEST(LiteralSpeakerTest, DroneLexiconSplitsEvenlyOverCovers) {
  const auto space = make_drone_world();
  const auto lexicon = build_drone_lexicon(space);
  const auto p = *space.find("D3_Altitude");
  EXPECT_NEAR(literal_speaker(lexicon, *lexicon.find("D3 Altitude"), p), 1.0 / 3, kTight);
  EXPECT_NEAR(literal_speaker(lexicon, *lexicon.find("Altitude"), p), 1.0 / 3, kTight);
  EXPECT_NEAR(literal_speaker(lexicon, *lexicon.find("Beep"), p), 1.0 / 3, kTight);
  EXPECT_EQ(literal_speaker(lexicon, *lexicon.find("..."), p), 0.0);
  EXPECT_EQ(literal_speaker(lexicon, *lexicon.find("D1 Battery"), p), 0.0);
}

TEST(LiteralSpeakerTest, ToyLexicon) {
  const auto lexicon = testing::toy_lexicon();
  EXPECT_NEAR(literal_speaker(lexicon, 0, PropertyId{0}), 0.5, kTight);
  EXPECT_NEAR(literal_speaker(lexicon, 1, PropertyId{0}), 0.5, kTight);
  EXPECT_NEAR(literal_speaker(lexicon, 1, PropertyId{1}), 1.0, kTight);
}

TEST(LiteralSpeakerTest, UncoveredPropertyIsAnError) {
  const Lexicon lexicon({{0, "u", Category::kTwoFeature, 3}}, {{true, false}});
  EXPECT_THROW(literal_speaker(lexicon, 0, PropertyId{1}), ValidationError);
}

TEST(PragmaticListenerTest, ScalarImplicature) {
  const auto lexicon = testing::toy_lexicon();
  const auto l1 = pragmatic_listener_uniform(lexicon, 1);
  EXPECT_NEAR(l1[0], 1.0 / 3, kTight);
  EXPECT_NEAR(l1[1], 2.0 / 3, kTight);
  EXPECT_NEAR(pragmatic_listener_uniform(lexicon, 0)[0], 1.0, kTight);
}

TEST(PragmaticListenerTest, SkewedPrior) {
  const PragmaticListener listener(testing::toy_lexicon());
  std::vector<double> prior = {0.9, 0.1}, out(2);
  listener.listen(1, prior, out);
  EXPECT_NEAR(out[0], 9.0 / 11, kTight);
  EXPECT_NEAR(out[1], 2.0 / 11, kTight);
}

TEST(PragmaticListenerTest, BeepIsUniformUnderUniformPrior) {
  const auto space = make_drone_world();
  const auto lexicon = build_drone_lexicon(space);
  for (double x : pragmatic_listener_uniform(lexicon, *lexicon.find("Beep")))
    EXPECT_NEAR(x, 1.0 / 24, kTight);
}

TEST(PragmaticListenerTest, SilenceHasNoListenerReading) {
  const auto space = make_drone_world();
  const auto lexicon = build_drone_lexicon(space);
  EXPECT_THROW(pragmatic_listener_uniform(lexicon, *lexicon.find("...")), std::invalid_argument);
}

TEST(UserPriorTest, CriticalMassWithSmoothing) {
  const auto world = testing::reduced_world();
  auto b = BeliefState::zeros(world.space);
  b[PropertyId{0}][0] = 0.8;  // critical bin
  b[PropertyId{0}][5] = 0.2;
  b[PropertyId{1}][5] = 1.0;
  const auto prior = user_prior(b, world.space, 0.01);
  EXPECT_NEAR(prior[0], 0.81 / 0.82, kTight);
  EXPECT_NEAR(prior[1], 0.01 / 0.82, kTight);
  EXPECT_NEAR(prior[0], 0.9878, 5e-5);
}

TEST(UserPriorTest, SymmetricAndSmoothedLimits) {
  const auto space = make_drone_world();
  for (double x : user_prior(BeliefState::uniform(space), space, 0.01)) {
    // Uniform beliefs do not give equal masses across attributes, so only
    // check normalization here; equal-mass symmetry is checked below.
    EXPECT_GT(x, 0.0);
  }
  const auto world = testing::reduced_world();
  std::vector<ValueIndex> same = {0, 1};
  for (double x : user_prior(point_masses(world.space, same), world.space, 0.01))
    EXPECT_NEAR(x, 0.5, kTight);
  std::mt19937_64 rng(1);
  for (double x : user_prior(random_belief(space, rng), space, 1e9))
    EXPECT_NEAR(x, 1.0 / 24, 1e-8);
}

TEST(UserPriorListenerTest, UniformPriorReducesToUniformListener) {
  const auto space = make_drone_world();
  const auto lexicon = build_drone_lexicon(space);
  // Equal critical mass everywhere: every property believes one critical value.
  std::vector<ValueIndex> critical;
  for (std::size_t i = 0; i < space.size(); ++i)
    critical.push_back(space.critical_values(PropertyId{i}).front());
  const auto b = point_masses(space, critical);
  const PragmaticsConfig config;
  for (const auto& u : lexicon.utterances()) {
    if (u.category == Category::kSilence) continue;
    const auto user = pragmatic_listener_user(lexicon, u.id, b, space, config);
    const auto uniform = pragmatic_listener_uniform(lexicon, u.id);
    for (std::size_t i = 0; i < user.size(); ++i) EXPECT_NEAR(user[i], uniform[i], kTight);
  }
}

TEST(UserPriorListenerTest, BeepFollowsConcentratedPrior) {
  const auto space = make_drone_world();
  const auto lexicon = build_drone_lexicon(space);
  std::vector<ValueIndex> calm;
  for (std::size_t i = 0; i < space.size(); ++i)
    calm.push_back(space.non_critical_values(PropertyId{i}).front());
  const auto target = *space.find("D2_WindSpeed");
  calm[target.value] = space.critical_values(target).front();
  const auto l1 = pragmatic_listener_user(lexicon, *lexicon.find("Beep"), point_masses(space, calm),
                                          space, PragmaticsConfig{});
  EXPECT_NEAR(l1[target.value], 1.01 / 1.24, kTight);  // (1 + k) / (1 + 24k)
  EXPECT_EQ(std::max_element(l1.begin(), l1.end()) - l1.begin(),
            static_cast<std::ptrdiff_t>(target.value));
}

TEST(UserPriorListenerTest, PriorScaleInvariance) {
  const auto space = make_drone_world();
  const auto lexicon = build_drone_lexicon(space);
  const PragmaticListener listener(lexicon);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> unit(0.01, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> prior(space.size());
    for (double& x : prior) x = unit(rng);
    std::vector<double> scaled = prior;
    const double c = 0.001 + 1000 * unit(rng);
    for (double& x : scaled) x *= c;
    const int u = trial % 31;
    std::vector<double> a(space.size()), b(space.size());
    listener.listen(u, prior, a);
    listener.listen(u, scaled, b);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], kTight);
  }
}

TEST(AttentionTest, Modes) {
  const auto lexicon = testing::toy_lexicon();
  const std::vector<double> l1 = {0.6, 0.4};
  PragmaticsConfig config;
  EXPECT_EQ(attention(lexicon, 1, l1, config), (PropertyWeights{0.6, 0.4}));
  config.attention_mode = AttentionMode::kWinnerTakeAll;
  EXPECT_EQ(attention(lexicon, 1, l1, config), (PropertyWeights{1.0, 0.0}));
  const std::vector<double> tie = {0.5, 0.5};
  EXPECT_EQ(attention(lexicon, 1, tie, config), (PropertyWeights{1.0, 0.0}));
  EXPECT_EQ(attention(lexicon, kBlockSlot, l1, config), (PropertyWeights{0.0, 0.0}));
}

TEST(AttentionTest, SilenceSpreadsEpsilon) {
  const auto space = make_drone_world();
  const auto lexicon = build_drone_lexicon(space);
  const std::vector<double> ignored(space.size(), 0.0);
  for (double x : attention(lexicon, *lexicon.find("..."), ignored, PragmaticsConfig{}))
    EXPECT_EQ(x, 0.02);
}

TEST(AttentionTest, DirectAttentionSumsToOne) {
  const auto space = make_drone_world();
  const auto lexicon = build_drone_lexicon(space);
  std::mt19937_64 rng(9);
  const PragmaticsConfig config;
  for (int trial = 0; trial < 20; ++trial) {
    const auto b = random_belief(space, rng);
    for (const auto& u : lexicon.utterances()) {
      if (u.category == Category::kSilence) continue;
      const auto at = attention(lexicon, u.id,
                                pragmatic_listener_user(lexicon, u.id, b, space, config), config);
      EXPECT_NEAR(std::accumulate(at.begin(), at.end(), 0.0), 1.0, 1e-9);
    }
  }
}

class BeliefUpdateTest : public ::testing::Test {
 protected:
  testing::ReducedWorld world = testing::reduced_world();
  std::vector<ValueIndex> state = {5, 0};
  CriticalityVector crit{{0, 1}};

  BeliefState prior_belief() const {
    auto b = BeliefState::zeros(world.space);
    b[PropertyId{0}][5] = 0.2;
    b[PropertyId{0}][7] = 0.8;
    b[PropertyId{1}][0] = 0.2;
    b[PropertyId{1}][3] = 0.8;
    return b;
  }
};

TEST_F(BeliefUpdateTest, LinearExamples) {
  const PragmaticsConfig config;
  const auto b = prior_belief();
  const std::vector<double> full = {1.0, 0.0};
  const auto after = update_beliefs(b, world.space, state, full, crit, config);
  EXPECT_EQ(after.at(PropertyId{0}, 5), 1.0);
  EXPECT_EQ(after.at(PropertyId{0}, 7), 0.0);
  EXPECT_TRUE(std::ranges::equal(after[PropertyId{1}], b[PropertyId{1}]));

  const std::vector<double> half = {0.5, 0.5};
  const auto mixed = update_beliefs(b, world.space, state, half, crit, config);
  EXPECT_NEAR(mixed.at(PropertyId{0}, 5), 0.6, kTight);
  EXPECT_NEAR(mixed.at(PropertyId{1}, 0), 0.6, kTight);
  EXPECT_TRUE(mixed.is_normalized());
}

TEST_F(BeliefUpdateTest, LinearMonotoneInAttention) {
  const PragmaticsConfig config;
  const auto b = prior_belief();
  double last = -1.0;
  for (int i = 0; i <= 20; ++i) {
    const double a = i / 20.0;
    const std::vector<double> at = {a, a};
    const double now = update_beliefs(b, world.space, state, at, crit, config).at(PropertyId{0}, 5);
    EXPECT_GE(now, last);
    last = now;
  }
}

TEST_F(BeliefUpdateTest, LogitModeStaysNormalizedAndMovesTowardTruth) {
  PragmaticsConfig config;
  config.belief_update = LogitUpdate{0.9, 2.0};
  const auto b = prior_belief();
  const std::vector<double> at = {0.5, 0.5};
  const auto after = update_beliefs(b, world.space, state, at, crit, config);
  EXPECT_TRUE(after.is_normalized());
  EXPECT_GT(after.at(PropertyId{1}, 0), b.at(PropertyId{1}, 0));
  const std::vector<double> none = {0.0, 0.0};
  const auto unattended = update_beliefs(b, world.space, state, none, crit, config);
  EXPECT_TRUE(unattended.is_normalized());
  for (double x : unattended.flat()) EXPECT_GE(x, 0.0);
}

TEST(BeliefUpdatePropertyTest, RandomUpdatesPreserveNormalization) {
  const auto space = make_drone_world();
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  PragmaticsConfig linear, logit;
  logit.belief_update = LogitUpdate{0.8, 1.5};
  for (int trial = 0; trial < 200; ++trial) {
    auto b = random_belief(space, rng);
    std::vector<ValueIndex> state;
    CriticalityVector crit;
    std::vector<double> at;
    for (std::size_t i = 0; i < space.size(); ++i) {
      const auto n = static_cast<int>(space.domain_size(PropertyId{i}));
      state.push_back(std::uniform_int_distribution<int>(0, n - 1)(rng));
      crit.flags.push_back(space.is_critical(PropertyId{i}, state.back()));
      at.push_back(unit(rng));
    }
    for (const auto* config : {&linear, &logit}) {
      const auto after = update_beliefs(b, space, state, at, crit, *config);
      ASSERT_LE(after.normalization_error(), 1e-9);
      for (double x : after.flat()) ASSERT_GE(x, 0.0);
    }
  }
}

TEST_F(BeliefUpdateTest, RewardModes) {
  PragmaticsConfig config;
  const auto b = prior_belief();
  EXPECT_EQ(reward(b, state, no_criticality(world.space), b, config), 0.0);

  const auto aligned = point_masses(world.space, state);
  const CriticalityVector both{{1, 1}};
  EXPECT_EQ(reward(aligned, state, both, b, config), 2.0);

  const std::vector<double> half = {0.5, 0.5};
  const auto after = update_beliefs(b, world.space, state, half, crit, config);
  EXPECT_NEAR(reward(after, state, crit, b, config), 0.6, kTight);

  config.reward_mode = BeliefDeltaReward{};
  EXPECT_NEAR(reward(after, state, crit, b, config), 0.4, kTight);
  config.reward_mode = AdditiveWeightReward{0.1};
  EXPECT_NEAR(reward(after, state, crit, b, config), 0.6 * 1.1 + 0.6 * 0.1, kTight);
}

TEST(RewardPropertyTest, CriticalOnlyBoundedByCriticalCount) {
  const auto space = make_drone_world();
  std::mt19937_64 rng(5);
  const PragmaticsConfig config;
  for (int trial = 0; trial < 200; ++trial) {
    const auto b = random_belief(space, rng);
    std::vector<ValueIndex> state;
    CriticalityVector crit;
    for (std::size_t i = 0; i < space.size(); ++i) {
      const auto n = static_cast<int>(space.domain_size(PropertyId{i}));
      state.push_back(std::uniform_int_distribution<int>(0, n - 1)(rng));
      crit.flags.push_back(space.is_critical(PropertyId{i}, state.back()));
    }
    const double r = reward(b, state, crit, b, config);
    EXPECT_GE(r, 0.0);
    EXPECT_LE(r, crit.count() + 1e-12);
  }
}

TEST(PragmaticsConfigTest, Validation) {
  PragmaticsConfig config;
  EXPECT_NO_THROW(config.validate());
  auto bad = config;
  bad.silence_attention = 0.0;
  EXPECT_THROW(bad.validate(), ValidationError);
  bad = config;
  bad.silence_attention = 1.0;
  EXPECT_THROW(bad.validate(), ValidationError);
  bad = config;
  bad.prior_smoothing = 0.0;
  EXPECT_THROW(bad.validate(), ValidationError);
  bad = config;
  bad.rationality = -1.0;
  EXPECT_THROW(bad.validate(), ValidationError);
  bad = config;
  bad.belief_update = LogitUpdate{0.0, 1.0};
  EXPECT_THROW(bad.validate(), ValidationError);
  bad = config;
  bad.reward_mode = AdditiveWeightReward{-0.5};
  EXPECT_THROW(bad.validate(), ValidationError);
}

TEST(PragmaticsConfigTest, CanonicalKeepsEpsilonAndKappa) {
  PragmaticsConfig config;
  config.attention_mode = AttentionMode::kWinnerTakeAll;
  config.belief_update = LogitUpdate{};
  config.reward_mode = BeliefDeltaReward{};
  config.silence_attention = 0.05;
  config.prior_smoothing = 0.2;
  const auto canonical = config.canonical();
  EXPECT_EQ(canonical.attention_mode, AttentionMode::kDirect);
  EXPECT_TRUE(std::holds_alternative<LinearUpdate>(canonical.belief_update));
  EXPECT_TRUE(std::holds_alternative<CriticalOnlyReward>(canonical.reward_mode));
  EXPECT_EQ(canonical.silence_attention, 0.05);
  EXPECT_EQ(canonical.prior_smoothing, 0.2);
}

}  // namespace
}  // namespace drsa
