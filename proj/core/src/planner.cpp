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

#include "drsa/planner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <tuple>

#include "drsa/errors.hpp"

namespace drsa {

std::string_view ModelVariant::name() const {
  if (use_planning) return use_user_priors ? "Full" : "d-RSA+Planning";
  return use_user_priors ? "d-RSA+Priors" : "d-RSA";
}

std::optional<ModelVariant> parse_variant(std::string_view name) {
  for (ModelVariant v : kVariants)
    if (v.name() == name) return v;
  return std::nullopt;
}

namespace {

// One timestep of listener dynamics under a fixed speaker model. Holds
// scratch buffers, so each instance is single-threaded.
class StepModel {
 public:
  StepModel(const PlanningProblem& problem, ListenerMode mode, const PragmaticsConfig& config)
      : problem_(problem),
        mode_(mode),
        config_(config),
        listener_(problem.lexicon, config.rationality),
        n_(problem.space.size()),
        prior_(n_, 1.0 / static_cast<double>(n_)),
        l1_(n_),
        previous_(problem.initial) {
    config_.validate();
    if (problem.lexicon.property_count() != n_)
      throw ValidationError("lexicon and property space disagree on |P|");
    for (int t = 1; t <= problem.scenario.horizon(); ++t)
      criticality_.push_back(criticality(problem.space, problem.scenario, t));
    needs_previous_ = std::holds_alternative<BeliefDeltaReward>(config_.reward_mode);
  }

  int horizon() const { return problem_.scenario.horizon(); }

  // Sets the prior from b_{t-1}; call once per decision point.
  void prepare(const BeliefState& previous) {
    if (mode_ == ListenerMode::kUserPrior)
      user_prior(previous, problem_.space, config_.prior_smoothing, prior_);
  }

  // Turns `belief` from b_{t-1} into b_t for `slot` at time t and returns
  // R_t. `prepare` must have been called with b_{t-1} for utterance slots.
  double step(int t, int slot, BeliefState& belief, std::span<double> attention_out) {
    const auto& lexicon = problem_.lexicon;
    if (slot != kBlockSlot && lexicon.utterance(slot).category != Category::kSilence)
      listener_.listen(slot, prior_, l1_);
    attention(lexicon, slot, l1_, config_, attention_out);
    if (needs_previous_) previous_ = belief;
    const auto state = problem_.scenario.state(t);
    const auto& crit = criticality_[static_cast<std::size_t>(t - 1)];
    apply_belief_update(belief, problem_.space, state, attention_out, crit, config_);
    return reward(belief, state, crit, previous_, config_);
  }

 private:
  const PlanningProblem& problem_;
  ListenerMode mode_;
  PragmaticsConfig config_;
  PragmaticListener listener_;
  std::size_t n_;
  std::vector<CriticalityVector> criticality_;
  PropertyWeights prior_;
  PropertyWeights l1_;
  BeliefState previous_;
  bool needs_previous_ = false;
};

void check_horizon(const PlanningProblem& problem) {
  if (problem.scenario.horizon() < 1) throw ValidationError("scenario has no timesteps");
  if (problem.initial.property_count() != problem.space.size())
    throw ValidationError("initial beliefs do not match the property space");
}

class ExhaustiveSearch {
 public:
  ExhaustiveSearch(const PlanningProblem& problem, ListenerMode mode,
                   const PragmaticsConfig& config, const BeliefObserver* observer)
      : problem_(problem),
        model_(problem, mode, config),
        observer_(observer),
        horizon_(problem.scenario.horizon()),
        beliefs_(static_cast<std::size_t>(horizon_) + 1, problem.initial),
        scratch_(problem.space.size()),
        current_(static_cast<std::size_t>(horizon_), kBlockSlot) {}

  void run() { descend(1, 0.0, 0); }

  const SlotSequence& best() const { return best_; }
  double best_reward() const { return best_reward_; }
  std::uint64_t leaves() const { return leaves_; }

 private:
  // beliefs_[t - 1] holds b_{t-1} on entry.
  void descend(int t, double accumulated, int busy_slots) {
    if (t > horizon_) {
      consider(accumulated, busy_slots);
      return;
    }
    const BeliefState& previous = beliefs_[static_cast<std::size_t>(t - 1)];
    model_.prepare(previous);
    for (const auto& u : problem_.lexicon.utterances()) {
      const int end = t + u.duration - 1;
      if (end > horizon_) continue;
      BeliefState& next = beliefs_[static_cast<std::size_t>(end)];
      next = previous;
      double gained = model_.step(t, u.id, next, scratch_);
      notify(next);
      for (int s = t + 1; s <= end; ++s) {
        gained += model_.step(s, kBlockSlot, next, scratch_);
        notify(next);
      }
      current_[static_cast<std::size_t>(t - 1)] = u.id;
      for (int s = t + 1; s <= end; ++s) current_[static_cast<std::size_t>(s - 1)] = kBlockSlot;
      const int busy = u.category == Category::kSilence ? 0 : u.duration;
      descend(end + 1, accumulated + gained, busy_slots + busy);
      // Sibling subtrees reuse beliefs_[>= t]; only beliefs_[t - 1] must
      // survive, and it is never written below this frame.
      if (u.id + 1 < static_cast<int>(problem_.lexicon.size())) model_.prepare(previous);
    }
  }

  void consider(double total, int busy_slots) {
    ++leaves_;
    const bool better =
        best_.empty() || total > best_reward_ + kRewardTieTolerance ||
        (std::abs(total - best_reward_) <= kRewardTieTolerance && busy_slots < best_busy_);
    if (better) {
      best_ = current_;
      best_reward_ = total;
      best_busy_ = busy_slots;
    }
  }

  void notify(const BeliefState& b) {
    if (observer_ != nullptr && *observer_) (*observer_)(b);
  }

  const PlanningProblem& problem_;
  StepModel model_;
  const BeliefObserver* observer_;
  int horizon_;
  std::vector<BeliefState> beliefs_;
  PropertyWeights scratch_;
  SlotSequence current_;
  SlotSequence best_;
  double best_reward_ = 0.0;
  int best_busy_ = 0;
  std::uint64_t leaves_ = 0;
};

}  // namespace

PlanResult simulate_sequence(const PlanningProblem& problem, const SlotSequence& sequence,
                             ListenerMode mode, const PragmaticsConfig& config,
                             const BeliefObserver* observer) {
  check_horizon(problem);
  const int horizon = problem.scenario.horizon();
  if (!is_legal(problem.lexicon, sequence, horizon))
    throw std::invalid_argument("sequence is not legal for this lexicon and horizon");

  StepModel model(problem, mode, config);
  PlanResult result;
  result.sequence = sequence;
  BeliefState belief = problem.initial;
  for (int t = 1; t <= horizon; ++t) {
    const int slot = sequence[static_cast<std::size_t>(t - 1)];
    if (slot != kBlockSlot) model.prepare(belief);
    PropertyWeights at(problem.space.size());
    const double r = model.step(t, slot, belief, at);
    if (observer != nullptr && *observer) (*observer)(belief);
    result.per_step_reward.push_back(r);
    result.cumulative_reward += r;
    result.belief_trajectory.push_back(belief);
    result.attention_trajectory.push_back(std::move(at));
  }
  result.planner_internal_reward = result.cumulative_reward;
  return result;
}

PlanResult evaluate(const PlanningProblem& problem, const SlotSequence& sequence,
                    const PragmaticsConfig& config) {
  return simulate_sequence(problem, sequence, ListenerMode::kUserPrior, config.canonical());
}

PlanResult greedy_plan(const PlanningProblem& problem, ListenerMode mode,
                       const PragmaticsConfig& config, const BeliefObserver* observer) {
  check_horizon(problem);
  const int horizon = problem.scenario.horizon();
  const auto& lexicon = problem.lexicon;
  StepModel model(problem, mode, config);
  PropertyWeights scratch(problem.space.size());

  SlotSequence sequence;
  sequence.reserve(static_cast<std::size_t>(horizon));
  BeliefState belief = problem.initial;
  BeliefState candidate;
  double internal = 0.0;

  // Lower key wins a tie: Silence, then shorter, then lower id.
  auto tie_key = [&](int id) {
    const auto& u = lexicon.utterance(id);
    return std::make_tuple(u.category == Category::kSilence ? 0 : 1, u.duration, u.id);
  };

  int t = 1;
  while (t <= horizon) {
    model.prepare(belief);
    int chosen = -1;
    double chosen_reward = 0.0;
    for (const auto& u : lexicon.utterances()) {
      if (t + u.duration - 1 > horizon) continue;
      candidate = belief;
      const double r = model.step(t, u.id, candidate, scratch);
      if (observer != nullptr && *observer) (*observer)(candidate);
      const bool better =
          chosen < 0 || r > chosen_reward + kRewardTieTolerance ||
          (std::abs(r - chosen_reward) <= kRewardTieTolerance && tie_key(u.id) < tie_key(chosen));
      if (better) {
        chosen = u.id;
        chosen_reward = r;
      }
    }
    if (chosen < 0) throw std::logic_error("no utterance fits the remaining horizon");

    const int duration = lexicon.utterance(chosen).duration;
    internal += model.step(t, chosen, belief, scratch);
    sequence.push_back(chosen);
    for (int s = t + 1; s < t + duration; ++s) {
      internal += model.step(s, kBlockSlot, belief, scratch);
      sequence.push_back(kBlockSlot);
    }
    t += duration;
  }

  PlanResult result = evaluate(problem, sequence, config);
  result.planner_internal_reward = internal;
  return result;
}

PlanResult full_plan(const PlanningProblem& problem, ListenerMode mode,
                     const PragmaticsConfig& config, const BeliefObserver* observer) {
  check_horizon(problem);
  if (problem.scenario.horizon() > kMaxPlanningHorizon)
    throw CapacityError("exhaustive planning is limited to horizon " +
                        std::to_string(kMaxPlanningHorizon));
  ExhaustiveSearch search(problem, mode, config, observer);
  search.run();

  PlanResult result = evaluate(problem, search.best(), config);
  result.planner_internal_reward = search.best_reward();
  result.candidates_evaluated = search.leaves();
  return result;
}

PlanResult plan(const PlanningProblem& problem, ModelVariant variant,
                const PragmaticsConfig& config, const BeliefObserver* observer) {
  return variant.use_planning ? full_plan(problem, variant.listener_mode(), config, observer)
                              : greedy_plan(problem, variant.listener_mode(), config, observer);
}

}  // namespace drsa
