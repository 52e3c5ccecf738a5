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

#ifndef DRSA_PRAGMATICS_HPP_
#define DRSA_PRAGMATICS_HPP_

#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "drsa/lexicon.hpp"
#include "drsa/property.hpp"
#include "drsa/world.hpp"

namespace drsa {

// The listener's per-property distributions over value domains, stored flat
// in the owning space's layout.
class BeliefState {
 public:
  BeliefState() = default;

  static BeliefState uniform(const PropertySpace& space);
  static BeliefState zeros(const PropertySpace& space);

  std::size_t property_count() const { return offsets_ ? offsets_->size() - 1 : 0; }
  std::span<const double> operator[](PropertyId p) const {
    return {probs_.data() + (*offsets_)[p.value], (*offsets_)[p.value + 1] - (*offsets_)[p.value]};
  }
  std::span<double> operator[](PropertyId p) {
    return {probs_.data() + (*offsets_)[p.value], (*offsets_)[p.value + 1] - (*offsets_)[p.value]};
  }
  double at(PropertyId p, ValueIndex v) const {
    return probs_[(*offsets_)[p.value] + static_cast<std::size_t>(v)];
  }

  std::span<const double> flat() const { return probs_; }
  std::span<double> flat() { return probs_; }

  // Largest |sum - 1| over properties.
  double normalization_error() const;
  bool is_normalized(double tolerance = 1e-9) const { return normalization_error() <= tolerance; }

  friend bool operator==(const BeliefState& a, const BeliefState& b) { return a.probs_ == b.probs_; }

 private:
  std::shared_ptr<const std::vector<std::size_t>> offsets_;
  std::vector<double> probs_;
};

// Distribution (or weight vector) indexed by property.
using PropertyWeights = std::vector<double>;

enum class AttentionMode { kDirect, kWinnerTakeAll };

struct LinearUpdate {};
struct LogitUpdate {
  double delta_memory = 1.0;    // weight on the previous log-odds, (0, 1]
  double gamma_critical = 1.0;  // evidence gain for critical properties, > 0
};
using BeliefUpdateMode = std::variant<LinearUpdate, LogitUpdate>;

struct CriticalOnlyReward {};
struct BeliefDeltaReward {};
struct AdditiveWeightReward {
  double omega = 0.1;
};
using RewardMode = std::variant<CriticalOnlyReward, BeliefDeltaReward, AdditiveWeightReward>;

struct PragmaticsConfig {
  AttentionMode attention_mode = AttentionMode::kDirect;
  BeliefUpdateMode belief_update = LinearUpdate{};
  RewardMode reward_mode = CriticalOnlyReward{};
  double rationality = 1.0;        // alpha
  double silence_attention = 0.02;  // epsilon
  double prior_smoothing = 0.01;    // kappa

  // Throws ValidationError.
  void validate() const;

  // The fixed dynamics every plan is scored against, keeping this config's
  // epsilon and kappa.
  PragmaticsConfig canonical() const;
};

// S0 and L1 over one lexicon. The S0 table is computed once.
class PragmaticListener {
 public:
  explicit PragmaticListener(const Lexicon& lexicon, double rationality = 1.0);

  const Lexicon& lexicon() const { return *lexicon_; }
  double s0(int utterance, PropertyId p) const {
    return s0_[static_cast<std::size_t>(utterance) * property_count_ + p.value];
  }

  // L1(. | u) under `prior` (any positive scale); written into `out`.
  void listen(int utterance, std::span<const double> prior, std::span<double> out) const;

 private:
  const Lexicon* lexicon_;
  std::size_t property_count_;
  std::vector<double> s0_;
};

// S0(u | p): uniform over the utterances whose meaning contains p. Throws
// ValidationError if no utterance covers p.
double literal_speaker(const Lexicon& lexicon, int utterance, PropertyId p,
                       double rationality = 1.0);

// L1(p | u) with P(p) = 1/|P|.
PropertyWeights pragmatic_listener_uniform(const Lexicon& lexicon, int utterance);

// P(p) proportional to kappa + the belief mass b(p) puts on StatCr(p).
PropertyWeights user_prior(const BeliefState& belief, const PropertySpace& space, double kappa);
void user_prior(const BeliefState& belief, const PropertySpace& space, double kappa,
                std::span<double> out);

// L1(p | u) with the prior conditioned on the previous beliefs.
PropertyWeights pragmatic_listener_user(const Lexicon& lexicon, int utterance,
                                        const BeliefState& previous, const PropertySpace& space,
                                        const PragmaticsConfig& config);

// Maps an L1 distribution to per-property attention. `slot` may be
// kBlockSlot, which yields all zeros; Silence yields epsilon everywhere and
// ignores `l1`.
PropertyWeights attention(const Lexicon& lexicon, int slot, std::span<const double> l1,
                          const PragmaticsConfig& config);
void attention(const Lexicon& lexicon, int slot, std::span<const double> l1,
               const PragmaticsConfig& config, std::span<double> out);

// One step of belief dynamics toward the true state.
BeliefState update_beliefs(const BeliefState& previous, const PropertySpace& space,
                           std::span<const ValueIndex> state, std::span<const double> attention,
                           const CriticalityVector& criticality, const PragmaticsConfig& config);
// In-place form; `belief` holds b_{t-1} on entry and b_t on return.
void apply_belief_update(BeliefState& belief, const PropertySpace& space,
                         std::span<const ValueIndex> state, std::span<const double> attention,
                         const CriticalityVector& criticality, const PragmaticsConfig& config);

// R_t. `previous` is read only by the belief-delta mode.
double reward(const BeliefState& current, std::span<const ValueIndex> state,
              const CriticalityVector& criticality, const BeliefState& previous,
              const PragmaticsConfig& config);

std::string to_string(AttentionMode mode);

}  // namespace drsa

#endif  // DRSA_PRAGMATICS_HPP_
