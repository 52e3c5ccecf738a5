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

#ifndef DRSA_USER_MODEL_HPP_
#define DRSA_USER_MODEL_HPP_

#include "drsa/pragmatics.hpp"
#include "drsa/user_profile.hpp"
#include "drsa/world.hpp"

namespace drsa {

// Probability an aware (or misinformed) user places on their anchor value.
inline constexpr double kAnchorMass = 0.9;

struct GeneralAwarenessNoise {
  double mean_offset;  // half-width of the uniform offset of the belief mean
  double sigma;        // std-dev of the discretized Gaussian
  double binary_correct;
};

// Fractions of the normalized [0, 1] range.
GeneralAwarenessNoise noise_for(GeneralAwareness level);

// b_0 for one simulated user.
//
// Scheduled properties: 0.9 on the anchor value plus a uniform remainder. The
// anchor is the critical value the property will hold at onset when the user
// is aware, otherwise a seeded non-critical value.
//
// Unscheduled properties: a discretized Gaussian around s_1(p) whose mean
// offset and width depend on general awareness; binary properties put
// 0.9 (High) or 0.6 (Low) on the correct value.
//
// Throws ValidationError when the profile's flags do not match the
// scenario's scheduled properties.
BeliefState initial_beliefs(const WorldScenario& scenario, const UserProfile& profile,
                            const PropertySpace& space);

}  // namespace drsa

#endif  // DRSA_USER_MODEL_HPP_
