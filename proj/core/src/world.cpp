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

#include "drsa/world.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "drsa/errors.hpp"
#include "drsa/random.hpp"

namespace drsa {

std::string_view attribute_name(Attribute attribute) {
  switch (attribute) {
    case Attribute::kBattery: return "Battery";
    case Attribute::kWindSpeed: return "WindSpeed";
    case Attribute::kRotor: return "Rotor";
    case Attribute::kAltitude: return "Altitude";
    case Attribute::kNoFlyZone: return "NoFlyZone";
    case Attribute::kDistance: return "Distance";
  }
  return "?";
}

std::string_view attribute_display_name(Attribute attribute) {
  switch (attribute) {
    case Attribute::kBattery: return "Battery";
    case Attribute::kWindSpeed: return "Wind Speed";
    case Attribute::kRotor: return "Rotor";
    case Attribute::kAltitude: return "Altitude";
    case Attribute::kNoFlyZone: return "No Fly Zone";
    case Attribute::kDistance: return "Distance";
  }
  return "?";
}

PropertySpace::PropertySpace(std::vector<Property> properties)
    : properties_(std::move(properties)) {
  if (properties_.empty()) throw ValidationError("property space is empty");
  std::vector<std::size_t> offsets;
  offsets.reserve(properties_.size() + 1);
  std::size_t running = 0;
  std::set<std::string> labels;
  for (const auto& prop : properties_) {
    if (prop.values.empty()) throw ValidationError("empty value domain for " + prop.label);
    if (prop.critical.size() != prop.values.size())
      throw ValidationError("critical mask size mismatch for " + prop.label);
    const auto n_crit = std::count(prop.critical.begin(), prop.critical.end(), true);
    if (n_crit == 0 || n_crit == static_cast<long>(prop.values.size()))
      throw ValidationError("critical region must be a non-empty strict subset for " +
                            prop.label);
    if (!labels.insert(prop.label).second)
      throw ValidationError("duplicate property label " + prop.label);
    offsets.push_back(running);
    running += prop.values.size();
  }
  offsets.push_back(running);
  offsets_ = std::make_shared<const std::vector<std::size_t>>(std::move(offsets));
}

bool PropertySpace::is_critical(PropertyId p, ValueIndex v) const {
  return property(p).critical.at(static_cast<std::size_t>(v));
}

std::vector<ValueIndex> PropertySpace::critical_values(PropertyId p) const {
  std::vector<ValueIndex> out;
  const auto& mask = property(p).critical;
  for (std::size_t v = 0; v < mask.size(); ++v)
    if (mask[v]) out.push_back(static_cast<ValueIndex>(v));
  return out;
}

std::vector<ValueIndex> PropertySpace::non_critical_values(PropertyId p) const {
  std::vector<ValueIndex> out;
  const auto& mask = property(p).critical;
  for (std::size_t v = 0; v < mask.size(); ++v)
    if (!mask[v]) out.push_back(static_cast<ValueIndex>(v));
  return out;
}

std::optional<PropertyId> PropertySpace::find(std::string_view label) const {
  for (std::size_t i = 0; i < properties_.size(); ++i)
    if (properties_[i].label == label) return PropertyId{i};
  return std::nullopt;
}

PropertySpace PropertySpace::restricted(std::span<const PropertyId> subset) const {
  std::vector<Property> props;
  props.reserve(subset.size());
  for (PropertyId p : subset) props.push_back(property(p));
  return PropertySpace(std::move(props));
}

PropertySpace make_drone_world() {
  std::vector<double> bins(kContinuousBins);
  for (int i = 0; i < kContinuousBins; ++i) bins[i] = i / double(kContinuousBins - 1);
  const std::vector<double> binary = {0.0, 1.0};  // nominal, abnormal

  auto continuous_mask = [](Attribute attr) {
    std::vector<bool> mask(kContinuousBins, false);
    switch (attr) {
      case Attribute::kBattery:  // low tail: [0, 0.15]
        mask[0] = mask[1] = true;
        break;
      case Attribute::kWindSpeed:  // high tail: [0.85, 1]
        mask[kContinuousBins - 2] = mask[kContinuousBins - 1] = true;
        break;
      default:  // Altitude, Distance: both envelope edges
        mask.front() = mask.back() = true;
        break;
    }
    return mask;
  };

  std::vector<Property> props;
  props.reserve(kDroneCount * kAttributes.size());
  for (int drone = 1; drone <= kDroneCount; ++drone) {
    for (Attribute attr : kAttributes) {
      Property prop;
      prop.label = "D" + std::to_string(drone) + "_" + std::string(attribute_name(attr));
      prop.drone = drone;
      prop.attribute = attr;
      if (attr == Attribute::kRotor || attr == Attribute::kNoFlyZone) {
        prop.values = binary;
        prop.critical = {false, true};
      } else {
        prop.values = bins;
        prop.critical = continuous_mask(attr);
      }
      props.push_back(std::move(prop));
    }
  }
  return PropertySpace(std::move(props));
}

void ScenarioConfig::validate(const PropertySpace& space) const {
  if (horizon < 1) throw ValidationError("horizon must be >= 1");
  if (critical_count < 2 || critical_count > 4)
    throw ValidationError("criticalCount must be in {2, 3, 4}");
  if (static_cast<std::size_t>(critical_count) > space.size())
    throw ValidationError("criticalCount exceeds the number of properties");
  if (dispersion < 0 || dispersion > 3) throw ValidationError("dispersion must be in {0..3}");
  if (first_onset < 1 || first_onset > 3 || first_onset > horizon)
    throw ValidationError("firstOnset must be in {1, 2, 3} and within the horizon");
  if (!(awareness_prob >= 0.0 && awareness_prob <= 1.0))
    throw ValidationError("awareness probability must be in [0, 1]");
}

std::span<const ValueIndex> WorldScenario::state(int t) const {
  if (t < 1 || t > horizon())
    throw std::out_of_range("timestep " + std::to_string(t) + " outside 1.." +
                            std::to_string(horizon()));
  return trajectory[static_cast<std::size_t>(t - 1)];
}

std::optional<int> WorldScenario::onset(PropertyId p) const {
  auto it = onsets.find(p);
  if (it == onsets.end()) return std::nullopt;
  return it->second;
}

int CriticalityVector::count() const {
  return static_cast<int>(std::count(flags.begin(), flags.end(), std::uint8_t{1}));
}

CriticalityVector criticality(const PropertySpace& space, const WorldScenario& scenario, int t) {
  const auto state = scenario.state(t);
  CriticalityVector out;
  out.flags.resize(space.size());
  for (std::size_t i = 0; i < space.size(); ++i)
    out.flags[i] = space.is_critical(PropertyId{i}, state[i]) ? 1 : 0;
  return out;
}

std::vector<int> onset_schedule(int critical_count, int dispersion, int first_onset,
                                int horizon) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(critical_count));
  for (int i = 0; i < critical_count; ++i)
    out.push_back(std::min(first_onset + i * dispersion, horizon));
  return out;
}

namespace {

template <typename T>
const T& pick(const std::vector<T>& items, Rng& rng) {
  std::uniform_int_distribution<std::size_t> dist(0, items.size() - 1);
  return items[dist(rng)];
}

// Bounded random walk that never enters the critical region.
std::vector<ValueIndex> background_path(const PropertySpace& space, PropertyId p, int horizon,
                                        Rng& rng) {
  const auto safe = space.non_critical_values(p);
  const int n = static_cast<int>(space.domain_size(p));
  std::vector<ValueIndex> path(static_cast<std::size_t>(horizon));
  ValueIndex cur = pick(safe, rng);
  std::uniform_int_distribution<int> step(-1, 1);
  for (int t = 0; t < horizon; ++t) {
    if (t > 0) {
      const ValueIndex next = cur + step(rng);
      if (next >= 0 && next < n && !space.is_critical(p, next)) cur = next;
    }
    path[static_cast<std::size_t>(t)] = cur;
  }
  return path;
}

// Drifts toward a chosen critical value, enters it exactly at `onset` and
// holds it through the horizon.
std::vector<ValueIndex> critical_path(const PropertySpace& space, PropertyId p, int horizon,
                                      int onset, Rng& rng) {
  const auto safe = space.non_critical_values(p);
  const ValueIndex target = pick(space.critical_values(p), rng);
  std::vector<ValueIndex> path(static_cast<std::size_t>(horizon));
  ValueIndex cur = pick(safe, rng);
  for (int t = 1; t <= horizon; ++t) {
    if (t >= onset) {
      cur = target;
    } else if (t > 1) {
      const ValueIndex next = cur + (target > cur ? 1 : -1);
      if (!space.is_critical(p, next)) cur = next;
    }
    path[static_cast<std::size_t>(t - 1)] = cur;
  }
  return path;
}

}  // namespace

WorldScenario generate_scenario(const PropertySpace& space, const ScenarioConfig& config,
                                std::uint64_t seed) {
  config.validate(space);
  Rng rng(mix_seed(seed, SeedStream::kWorld));

  WorldScenario scenario;
  scenario.seed = seed;
  scenario.config = config;

  // Partial Fisher-Yates: sample without replacement, keep draw order.
  std::vector<std::size_t> pool(space.size());
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (int i = 0; i < config.critical_count; ++i) {
    std::uniform_int_distribution<std::size_t> dist(static_cast<std::size_t>(i), pool.size() - 1);
    std::swap(pool[static_cast<std::size_t>(i)], pool[dist(rng)]);
    scenario.scheduled.push_back(PropertyId{pool[static_cast<std::size_t>(i)]});
  }
  const auto onsets = onset_schedule(config.critical_count, config.dispersion,
                                     config.first_onset, config.horizon);
  for (std::size_t i = 0; i < scenario.scheduled.size(); ++i)
    scenario.onsets[scenario.scheduled[i]] = onsets[i];

  scenario.trajectory.assign(static_cast<std::size_t>(config.horizon),
                             std::vector<ValueIndex>(space.size(), 0));
  for (std::size_t i = 0; i < space.size(); ++i) {
    const PropertyId p{i};
    const auto onset = scenario.onset(p);
    const auto path = onset ? critical_path(space, p, config.horizon, *onset, rng)
                            : background_path(space, p, config.horizon, rng);
    for (int t = 0; t < config.horizon; ++t)
      scenario.trajectory[static_cast<std::size_t>(t)][i] = path[static_cast<std::size_t>(t)];
  }

  scenario.profile = sample_user_profile(config.awareness_prob, config.general_awareness,
                                         scenario.scheduled,
                                         mix_seed(seed, SeedStream::kProfile));
  return scenario;
}

double overlap_metric(const PropertySpace& space, std::span<const PropertyId> critical_set) {
  if (critical_set.size() < 2)
    throw ValidationError("overlap metric needs at least two properties");
  std::size_t shared = 0, pairs = 0;
  for (std::size_t i = 0; i < critical_set.size(); ++i) {
    for (std::size_t j = i + 1; j < critical_set.size(); ++j) {
      const auto& a = space.property(critical_set[i]);
      const auto& b = space.property(critical_set[j]);
      ++pairs;
      if (a.drone == b.drone || a.attribute == b.attribute) ++shared;
    }
  }
  return static_cast<double>(shared) / static_cast<double>(pairs);
}

}  // namespace drsa
