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
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "drsa/errors.hpp"

namespace drsa {

namespace {

constexpr double kLogitClamp = 1e-6;

double logit(double p) {
  p = std::clamp(p, kLogitClamp, 1.0 - kLogitClamp);
  return std::log(p / (1.0 - p));
}

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

BeliefState BeliefState::zeros(const PropertySpace& space) {
  BeliefState b;
  b.offsets_ = space.offsets();
  b.probs_.assign(space.total_values(), 0.0);
  return b;
}

BeliefState BeliefState::uniform(const PropertySpace& space) {
  BeliefState b = zeros(space);
  for (std::size_t i = 0; i < space.size(); ++i) {
    auto row = b[PropertyId{i}];
    std::fill(row.begin(), row.end(), 1.0 / static_cast<double>(row.size()));
  }
  return b;
}

double BeliefState::normalization_error() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < property_count(); ++i) {
    const auto row = (*this)[PropertyId{i}];
    worst = std::max(worst, std::abs(std::accumulate(row.begin(), row.end(), 0.0) - 1.0));
  }
  return worst;
}

void PragmaticsConfig::validate() const {
  if (!(rationality > 0.0)) throw ValidationError("rationality must be > 0");
  if (!(silence_attention > 0.0 && silence_attention < 1.0))
    throw ValidationError("silenceAttention must be in (0, 1)");
  if (!(prior_smoothing > 0.0)) throw ValidationError("priorSmoothing must be > 0");
  if (const auto* logit_mode = std::get_if<LogitUpdate>(&belief_update)) {
    if (!(logit_mode->delta_memory > 0.0 && logit_mode->delta_memory <= 1.0))
      throw ValidationError("deltaMemory must be in (0, 1]");
    if (!(logit_mode->gamma_critical > 0.0)) throw ValidationError("gammaCritical must be > 0");
  }
  if (const auto* additive = std::get_if<AdditiveWeightReward>(&reward_mode)) {
    if (!(additive->omega > 0.0)) throw ValidationError("omega must be > 0");
  }
}

PragmaticsConfig PragmaticsConfig::canonical() const {
  PragmaticsConfig out;
  out.rationality = rationality;
  out.silence_attention = silence_attention;
  out.prior_smoothing = prior_smoothing;
  return out;
}

PragmaticListener::PragmaticListener(const Lexicon& lexicon, double rationality)
    : lexicon_(&lexicon), property_count_(lexicon.property_count()) {
  if (!(rationality > 0.0)) throw ValidationError("rationality must be > 0");
  s0_.assign(lexicon.size() * property_count_, 0.0);
  for (std::size_t p = 0; p < property_count_; ++p) {
    const int covers = lexicon.cover_count(PropertyId{p});
    if (covers == 0) continue;
    // exp(alpha * log 1[M(u, p)]) is 1 or 0 for every alpha > 0, so the
    // softmax reduces to an even split over covering utterances.
    for (std::size_t u = 0; u < lexicon.size(); ++u)
      if (lexicon.means(static_cast<int>(u), PropertyId{p}))
        s0_[u * property_count_ + p] = 1.0 / covers;
  }
}

void PragmaticListener::listen(int utterance, std::span<const double> prior,
                               std::span<double> out) const {
  const auto& u = lexicon_->utterance(utterance);
  if (u.category == Category::kSilence)
    throw std::invalid_argument("L1 is undefined for Silence");
  double total = 0.0;
  for (std::size_t p = 0; p < property_count_; ++p) {
    out[p] = s0_[static_cast<std::size_t>(utterance) * property_count_ + p] * prior[p];
    total += out[p];
  }
  if (!(total > 0.0)) throw std::invalid_argument("L1 numerator vanishes for " + u.label);
  for (std::size_t p = 0; p < property_count_; ++p) out[p] /= total;
}

double literal_speaker(const Lexicon& lexicon, int utterance, PropertyId p, double rationality) {
  if (lexicon.cover_count(p) == 0)
    throw ValidationError("property " + std::to_string(p.value) + " is covered by no utterance");
  return PragmaticListener(lexicon, rationality).s0(utterance, p);
}

PropertyWeights pragmatic_listener_uniform(const Lexicon& lexicon, int utterance) {
  const std::size_t n = lexicon.property_count();
  const PropertyWeights prior(n, 1.0 / static_cast<double>(n));
  PropertyWeights out(n);
  PragmaticListener(lexicon).listen(utterance, prior, out);
  return out;
}

void user_prior(const BeliefState& belief, const PropertySpace& space, double kappa,
                std::span<double> out) {
  double total = 0.0;
  for (std::size_t i = 0; i < space.size(); ++i) {
    const PropertyId p{i};
    const auto row = belief[p];
    const auto& mask = space.property(p).critical;
    double mass = kappa;
    for (std::size_t v = 0; v < row.size(); ++v)
      if (mask[v]) mass += row[v];
    out[i] = mass;
    total += mass;
  }
  for (std::size_t i = 0; i < space.size(); ++i) out[i] /= total;
}

PropertyWeights user_prior(const BeliefState& belief, const PropertySpace& space, double kappa) {
  PropertyWeights out(space.size());
  user_prior(belief, space, kappa, out);
  return out;
}

PropertyWeights pragmatic_listener_user(const Lexicon& lexicon, int utterance,
                                        const BeliefState& previous, const PropertySpace& space,
                                        const PragmaticsConfig& config) {
  const auto prior = user_prior(previous, space, config.prior_smoothing);
  PropertyWeights out(space.size());
  PragmaticListener(lexicon, config.rationality).listen(utterance, prior, out);
  return out;
}

void attention(const Lexicon& lexicon, int slot, std::span<const double> l1,
               const PragmaticsConfig& config, std::span<double> out) {
  if (slot == kBlockSlot) {
    std::fill(out.begin(), out.end(), 0.0);
    return;
  }
  if (lexicon.utterance(slot).category == Category::kSilence) {
    std::fill(out.begin(), out.end(), config.silence_attention);
    return;
  }
  switch (config.attention_mode) {
    case AttentionMode::kDirect:
      std::copy(l1.begin(), l1.end(), out.begin());
      break;
    case AttentionMode::kWinnerTakeAll: {
      // max_element returns the first maximum, i.e. the lowest property id.
      const auto winner = std::max_element(l1.begin(), l1.end()) - l1.begin();
      std::fill(out.begin(), out.end(), 0.0);
      out[static_cast<std::size_t>(winner)] = 1.0;
      break;
    }
  }
}

PropertyWeights attention(const Lexicon& lexicon, int slot, std::span<const double> l1,
                          const PragmaticsConfig& config) {
  PropertyWeights out(lexicon.property_count());
  attention(lexicon, slot, l1, config, out);
  return out;
}

void apply_belief_update(BeliefState& belief, const PropertySpace& space,
                         std::span<const ValueIndex> state, std::span<const double> attention,
                         const CriticalityVector& criticality, const PragmaticsConfig& config) {
  std::visit(
      Overloaded{
          [&](const LinearUpdate&) {
            for (std::size_t i = 0; i < space.size(); ++i) {
              const double a = attention[i];
              if (a == 0.0) continue;
              auto row = belief[PropertyId{i}];
              for (double& x : row) x *= (1.0 - a);
              row[static_cast<std::size_t>(state[i])] += a;
            }
          },
          [&](const LogitUpdate& mode) {
            const double evidence_true = logit(1.0);
            const double evidence_false = logit(0.0);
            for (std::size_t i = 0; i < space.size(); ++i) {
              const double gain = mode.gamma_critical * (criticality.flags[i] ? 1.0 : 0.0) *
                                  attention[i];
              auto row = belief[PropertyId{i}];
              double total = 0.0;
              for (std::size_t v = 0; v < row.size(); ++v) {
                const double evidence =
                    v == static_cast<std::size_t>(state[i]) ? evidence_true : evidence_false;
                row[v] = sigmoid(mode.delta_memory * logit(row[v]) + gain * evidence);
                total += row[v];
              }
              for (double& x : row) x /= total;
            }
          },
      },
      config.belief_update);
}

BeliefState update_beliefs(const BeliefState& previous, const PropertySpace& space,
                           std::span<const ValueIndex> state, std::span<const double> attention,
                           const CriticalityVector& criticality, const PragmaticsConfig& config) {
  BeliefState next = previous;
  apply_belief_update(next, space, state, attention, criticality, config);
  return next;
}

double reward(const BeliefState& current, std::span<const ValueIndex> state,
              const CriticalityVector& criticality, const BeliefState& previous,
              const PragmaticsConfig& config) {
  const std::size_t n = criticality.flags.size();
  return std::visit(
      Overloaded{
          [&](const CriticalOnlyReward&) {
            double r = 0.0;
            for (std::size_t i = 0; i < n; ++i)
              if (criticality.flags[i]) r += current.at(PropertyId{i}, state[i]);
            return r;
          },
          [&](const BeliefDeltaReward&) {
            double r = 0.0;
            for (std::size_t i = 0; i < n; ++i)
              if (criticality.flags[i])
                r += current.at(PropertyId{i}, state[i]) - previous.at(PropertyId{i}, state[i]);
            return r;
          },
          [&](const AdditiveWeightReward& mode) {
            double r = 0.0;
            for (std::size_t i = 0; i < n; ++i)
              r += current.at(PropertyId{i}, state[i]) * (criticality.flags[i] + mode.omega);
            return r;
          },
      },
      config.reward_mode);
}

std::string to_string(AttentionMode mode) {
  return mode == AttentionMode::kDirect ? "Direct" : "WinnerTakeAll";
}

}  // namespace drsa
