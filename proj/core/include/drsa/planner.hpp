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

#ifndef DRSA_PLANNER_HPP_
#define DRSA_PLANNER_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "drsa/lexicon.hpp"
#include "drsa/pragmatics.hpp"
#include "drsa/world.hpp"

namespace drsa {

// Longest horizon the exhaustive planner accepts.
inline constexpr int kMaxPlanningHorizon = 7;

enum class ListenerMode { kUniformPrior, kUserPrior };

struct ModelVariant {
  bool use_planning = false;
  bool use_user_priors = false;

  std::string_view name() const;
  ListenerMode listener_mode() const {
    return use_user_priors ? ListenerMode::kUserPrior : ListenerMode::kUniformPrior;
  }
  friend bool operator==(ModelVariant, ModelVariant) = default;
};

inline constexpr ModelVariant kDrsa{false, false};
inline constexpr ModelVariant kDrsaPriors{false, true};
inline constexpr ModelVariant kDrsaPlanning{true, false};
inline constexpr ModelVariant kFull{true, true};
inline constexpr std::array<ModelVariant, 4> kVariants = {kDrsa, kDrsaPriors, kDrsaPlanning, kFull};

std::optional<ModelVariant> parse_variant(std::string_view name);

// Everything a speaker needs to reason about one trial.
struct PlanningProblem {
  const PropertySpace& space;
  const Lexicon& lexicon;
  const WorldScenario& scenario;
  const BeliefState& initial;
};

struct PlanResult {
  SlotSequence sequence;
  std::vector<double> per_step_reward;
  double cumulative_reward = 0.0;
  // Index t - 1 holds b_t, resp. at_t.
  std::vector<BeliefState> belief_trajectory;
  std::vector<PropertyWeights> attention_trajectory;
  double planner_internal_reward = 0.0;
  // Complete sequences scored by the exhaustive planner; 0 for greedy.
  std::uint64_t candidates_evaluated = 0;
};

// Called on every belief state a planner or simulation computes.
using BeliefObserver = std::function<void(const BeliefState&)>;

// Rolls a legal sequence forward from b_0. A multi-step utterance updates
// beliefs in full at its first slot; its (X) slots carry zero attention.
// Throws std::invalid_argument for an illegal sequence.
PlanResult simulate_sequence(const PlanningProblem& problem, const SlotSequence& sequence,
                             ListenerMode mode, const PragmaticsConfig& config,
                             const BeliefObserver* observer = nullptr);

// The shared "true user" scoring: user-prior listener, direct attention,
// linear update, critical-only reward.
PlanResult evaluate(const PlanningProblem& problem, const SlotSequence& sequence,
                    const PragmaticsConfig& config);

// Myopic speaker: at each free slot picks the utterance with the highest
// immediate reward (ties: Silence, then shorter, then lower id).
PlanResult greedy_plan(const PlanningProblem& problem, ListenerMode mode,
                       const PragmaticsConfig& config, const BeliefObserver* observer = nullptr);

// Exhaustive finite-horizon speaker over every legal sequence (ties: fewer
// non-Silence slots, then enumeration order). Throws CapacityError beyond
// kMaxPlanningHorizon.
PlanResult full_plan(const PlanningProblem& problem, ListenerMode mode,
                     const PragmaticsConfig& config, const BeliefObserver* observer = nullptr);

PlanResult plan(const PlanningProblem& problem, ModelVariant variant,
                const PragmaticsConfig& config, const BeliefObserver* observer = nullptr);

// Absolute slack under which two cumulative rewards count as tied.
inline constexpr double kRewardTieTolerance = 1e-12;

}  // namespace drsa

#endif  // DRSA_PLANNER_HPP_
