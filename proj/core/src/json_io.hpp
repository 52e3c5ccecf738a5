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

#ifndef DRSA_SRC_JSON_IO_HPP_
#define DRSA_SRC_JSON_IO_HPP_

// nlohmann-based building blocks shared by serialization.cpp and
// harness.cpp. Not installed.

#include "json.hpp"

#include "drsa/lexicon.hpp"
#include "drsa/planner.hpp"
#include "drsa/pragmatics.hpp"
#include "drsa/world.hpp"

namespace drsa::json_io {

using Json = nlohmann::ordered_json;

Json scenario(const WorldScenario& scenario, const PropertySpace& space);
Json belief(const BeliefState& belief, const PropertySpace& space);
Json plan(const PlanResult& result, const Lexicon& lexicon, const PropertySpace& space,
          bool include_beliefs);
Json pragmatics(const PragmaticsConfig& config);
PragmaticsConfig parse_pragmatics(const Json& j);

// Parses text, mapping parse failures to ValidationError.
Json parse(std::string_view text);

}  // namespace drsa::json_io

#endif  // DRSA_SRC_JSON_IO_HPP_
