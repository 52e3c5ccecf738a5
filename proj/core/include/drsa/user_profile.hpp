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

#ifndef DRSA_USER_PROFILE_HPP_
#define DRSA_USER_PROFILE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>

#include "drsa/property.hpp"

namespace drsa {

enum class GeneralAwareness { kLow, kHigh };

std::string_view to_string(GeneralAwareness level);
std::optional<GeneralAwareness> parse_general_awareness(std::string_view text);

// A simulated operator. `aware_flags` records, for every scheduled critical
// property, whether the user already anticipates its critical value.
struct UserProfile {
  double critical_awareness_prob = 0.5;
  GeneralAwareness general_awareness = GeneralAwareness::kHigh;
  std::map<PropertyId, bool> aware_flags;
  std::uint64_t seed = 0;

  friend bool operator==(const UserProfile&, const UserProfile&) = default;
};

// Draws one Bernoulli(q) awareness flag per scheduled property, in the order
// given. Deterministic in `seed`.
UserProfile sample_user_profile(double critical_awareness_prob,
                                GeneralAwareness general_awareness,
                                std::span<const PropertyId> scheduled,
                                std::uint64_t seed);

}  // namespace drsa

#endif  // DRSA_USER_PROFILE_HPP_
