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

#include "drsa/metrics.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "drsa/stats.hpp"

namespace drsa {

double message_entropy(const Lexicon& lexicon, const SlotSequence& sequence) {
  std::array<int, 4> counts{};
  int total = 0;
  for (int slot : sequence) {
    if (slot == kBlockSlot) continue;
    ++counts[static_cast<std::size_t>(lexicon.utterance(slot).category)];
    ++total;
  }
  if (total == 0) return 0.0;
  double h = 0.0;
  for (int c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / total;
    h -= p * std::log2(p);
  }
  return h;
}

double specificity_ratio(const Lexicon& lexicon, const SlotSequence& sequence) {
  int specific = 0, ambiguous = 0;
  for (int slot : sequence) {
    if (slot == kBlockSlot) continue;
    switch (lexicon.utterance(slot).category) {
      case Category::kTwoFeature: ++specific; break;
      case Category::kSingleFeature:
      case Category::kBeep: ++ambiguous; break;
      case Category::kSilence: break;
    }
  }
  return (specific + 1.0) / (ambiguous + 1.0);
}

DelayMetrics alert_delays(const PlanResult& result, const WorldScenario& scenario,
                          const BeliefState& initial, const Lexicon& lexicon) {
  const int horizon = scenario.horizon();
  DelayMetrics out;
  std::vector<double> low, high;
  for (const auto& [p, onset] : scenario.onsets) {
    int delay = horizon;
    for (int t = onset; t <= horizon; ++t) {
      const int slot = result.sequence[static_cast<std::size_t>(t - 1)];
      if (slot == kBlockSlot || lexicon.utterance(slot).category == Category::kSilence) continue;
      if (result.attention_trajectory[static_cast<std::size_t>(t - 1)][p.value] <=
          kAlertAttentionThreshold)
        continue;
      const ValueIndex truth = scenario.value(t, p);
      const BeliefState& before =
          t == 1 ? initial : result.belief_trajectory[static_cast<std::size_t>(t - 2)];
      const BeliefState& after = result.belief_trajectory[static_cast<std::size_t>(t - 1)];
      if (after.at(p, truth) > before.at(p, truth)) {
        delay = t - onset;
        break;
      }
    }
    out.delays[p] = delay;
    (scenario.profile.aware_flags.at(p) ? high : low).push_back(delay);
  }

  constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
  out.median_low = low.empty() ? kNaN : stats::median(low);
  out.median_high = high.empty() ? kNaN : stats::median(high);
  if (low.empty() || high.empty() || out.median_low + out.median_high == 0.0) {
    out.prioritisation = 0.0;
  } else {
    out.prioritisation =
        (out.median_high - out.median_low) / (out.median_high + out.median_low);
  }
  return out;
}

}  // namespace drsa
