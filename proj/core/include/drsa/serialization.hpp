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

#ifndef DRSA_SERIALIZATION_HPP_
#define DRSA_SERIALIZATION_HPP_

#include <string>
#include <string_view>

#include "drsa/lexicon.hpp"
#include "drsa/planner.hpp"
#include "drsa/pragmatics.hpp"
#include "drsa/world.hpp"

namespace drsa {

// {seed, horizon, properties[], scheduled[], onsets{}, trajectory[t][property],
//  config{}, userProfile{}}. Trajectory entries are domain values, not indices.
std::string scenario_to_json(const WorldScenario& scenario, const PropertySpace& space);
// Throws ValidationError on malformed input or values outside a domain.
WorldScenario scenario_from_json(std::string_view text, const PropertySpace& space);

// {utterances: [{id, label, category, duration}], meaning: [[property labels]]}.
std::string lexicon_to_json(const Lexicon& lexicon, const PropertySpace& space);
Lexicon lexicon_from_json(std::string_view text, const PropertySpace& space);

// {property label: [probabilities]}.
std::string belief_to_json(const BeliefState& belief, const PropertySpace& space);

// {sequence: [labels], perStepReward, cumulativeReward, plannerInternalReward,
//  beliefTrajectory (optional)}.
std::string plan_to_json(const PlanResult& result, const Lexicon& lexicon,
                         const PropertySpace& space, bool include_beliefs);

// Round-trip parse of the config section used by batch files.
std::string pragmatics_config_to_json(const PragmaticsConfig& config);
PragmaticsConfig pragmatics_config_from_json(std::string_view text);

}  // namespace drsa

#endif  // DRSA_SERIALIZATION_HPP_
