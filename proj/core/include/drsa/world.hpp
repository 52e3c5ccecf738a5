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

#ifndef DRSA_WORLD_HPP_
#define DRSA_WORLD_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "drsa/property.hpp"
#include "drsa/user_profile.hpp"

namespace drsa {

enum class Attribute { kBattery, kWindSpeed, kRotor, kAltitude, kNoFlyZone, kDistance };

inline constexpr std::array<Attribute, 6> kAttributes = {
    Attribute::kBattery,  Attribute::kWindSpeed, Attribute::kRotor,
    Attribute::kAltitude, Attribute::kNoFlyZone, Attribute::kDistance};

inline constexpr int kDroneCount = 4;
inline constexpr int kContinuousBins = 11;
inline constexpr int kDefaultHorizon = 7;

// Identifier form, e.g. "WindSpeed".
std::string_view attribute_name(Attribute attribute);
// Spoken form, e.g. "Wind Speed".
std::string_view attribute_display_name(Attribute attribute);

struct Property {
  std::string label;  // e.g. "D2_Distance"
  int drone = 0;      // 1-based
  Attribute attribute = Attribute::kBattery;
  std::vector<double> values;  // ordered value domain V(p)
  std::vector<bool> critical;  // StatCr(p) as a mask over `values`
};

// The set of monitored properties with their value domains and critical
// regions. Immutable once built.
class PropertySpace {
 public:
  explicit PropertySpace(std::vector<Property> properties);

  std::size_t size() const { return properties_.size(); }
  const Property& property(PropertyId p) const { return properties_.at(p.value); }
  const std::vector<Property>& properties() const { return properties_; }

  std::size_t domain_size(PropertyId p) const { return property(p).values.size(); }
  bool is_critical(PropertyId p, ValueIndex v) const;
  std::vector<ValueIndex> critical_values(PropertyId p) const;
  std::vector<ValueIndex> non_critical_values(PropertyId p) const;

  std::optional<PropertyId> find(std::string_view label) const;

  // Layout of a flat per-(property, value) buffer.
  std::size_t offset(PropertyId p) const { return (*offsets_)[p.value]; }
  std::size_t total_values() const { return offsets_->back(); }
  const std::shared_ptr<const std::vector<std::size_t>>& offsets() const { return offsets_; }

  // A smaller space holding only `subset`, in the given order.
  PropertySpace restricted(std::span<const PropertyId> subset) const;

 private:
  std::vector<Property> properties_;
  std::shared_ptr<const std::vector<std::size_t>> offsets_;
};

// The canonical 4 drones x 6 attributes space.
PropertySpace make_drone_world();

struct ScenarioConfig {
  int horizon = kDefaultHorizon;
  int critical_count = 2;
  int dispersion = 0;
  int first_onset = 1;
  double awareness_prob = 0.5;
  GeneralAwareness general_awareness = GeneralAwareness::kHigh;

  // Throws ValidationError.
  void validate(const PropertySpace& space) const;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

// One trial's committed world trajectory and criticality schedule.
struct WorldScenario {
  std::uint64_t seed = 0;
  ScenarioConfig config;
  // trajectory[t - 1][p] is s_t(p), as a value index.
  std::vector<std::vector<ValueIndex>> trajectory;
  std::map<PropertyId, int> onsets;
  // Scheduled properties in sampling order.
  std::vector<PropertyId> scheduled;
  UserProfile profile;

  int horizon() const { return static_cast<int>(trajectory.size()); }
  // Throws std::out_of_range unless 1 <= t <= horizon().
  std::span<const ValueIndex> state(int t) const;
  ValueIndex value(int t, PropertyId p) const { return state(t)[p.value]; }
  std::optional<int> onset(PropertyId p) const;

  friend bool operator==(const WorldScenario&, const WorldScenario&) = default;
};

// Cr_t as one 0/1 flag per property.
struct CriticalityVector {
  std::vector<std::uint8_t> flags;

  bool operator[](PropertyId p) const { return flags[p.value] != 0; }
  int count() const;
};

CriticalityVector criticality(const PropertySpace& space, const WorldScenario& scenario, int t);

// Onset timesteps for a schedule: first, first + d, first + 2d, ... clamped to
// the horizon.
std::vector<int> onset_schedule(int critical_count, int dispersion, int first_onset, int horizon);

WorldScenario generate_scenario(const PropertySpace& space, const ScenarioConfig& config,
                                std::uint64_t seed);

// Fraction of unordered pairs in `critical_set` sharing a drone or an
// attribute. Throws ValidationError for fewer than two properties.
double overlap_metric(const PropertySpace& space, std::span<const PropertyId> critical_set);

}  // namespace drsa

#endif  // DRSA_WORLD_HPP_
