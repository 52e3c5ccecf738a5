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

#ifndef DRSA_METRICS_HPP_
#define DRSA_METRICS_HPP_

#include <map>

#include "drsa/lexicon.hpp"
#include "drsa/planner.hpp"
#include "drsa/pragmatics.hpp"
#include "drsa/world.hpp"

namespace drsa {

// Minimum attention an utterance must direct at p to count as alerting it.
inline constexpr double kAlertAttentionThreshold = 0.1;

// Shannon entropy (bits) of the category mix over utterance slots; (X)
// slots are ignored.
double message_entropy(const Lexicon& lexicon, const SlotSequence& sequence);

// (TwoFeature + 1) / (SingleFeature + Beep + 1).
double specificity_ratio(const Lexicon& lexicon, const SlotSequence& sequence);

struct DelayMetrics {
  std::map<PropertyId, int> delays;
  // NaN when the corresponding group is empty.
  double median_low;
  double median_high;
  // (high - low) / (high + low); 0 when a group is empty or both are 0.
  double prioritisation;
};

// Delay from onset to the first alert that directs more than
// kAlertAttentionThreshold attention at p and raises b(p)(s_t(p)); the
// horizon when no such alert happens. Medians split by the profile's
// awareness flags: "low" are properties the user was unaware of.
DelayMetrics alert_delays(const PlanResult& result, const WorldScenario& scenario,
                          const BeliefState& initial, const Lexicon& lexicon);

}  // namespace drsa

#endif  // DRSA_METRICS_HPP_
