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

#include "drsa/serialization.hpp"

#include <algorithm>
#include <string>

#include "drsa/errors.hpp"
#include "json_io.hpp"

namespace drsa {
namespace json_io {

Json parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ValidationError(std::string("missing field ") + key);
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad field ") + key + ": " + e.what());
  }
}

template <typename T>
T field_or(const Json& j, const char* key, T fallback) {
  return j.contains(key) ? field<T>(j, key) : fallback;
}

}  // namespace

Json scenario(const WorldScenario& scenario, const PropertySpace& space) {
  Json j;
  j["seed"] = scenario.seed;
  j["horizon"] = scenario.horizon();
  Json props = Json::array();
  for (const auto& p : space.properties()) props.push_back(p.label);
  j["properties"] = props;
  Json scheduled = Json::array();
  for (PropertyId p : scenario.scheduled) scheduled.push_back(space.property(p).label);
  j["scheduled"] = scheduled;
  Json onsets = Json::object();
  for (PropertyId p : scenario.scheduled) onsets[space.property(p).label] = *scenario.onset(p);
  j["onsets"] = onsets;
  Json trajectory = Json::array();
  for (int t = 1; t <= scenario.horizon(); ++t) {
    Json row = Json::object();
    const auto state = scenario.state(t);
    for (std::size_t i = 0; i < space.size(); ++i) {
      const auto& prop = space.property(PropertyId{i});
      row[prop.label] = prop.values[static_cast<std::size_t>(state[i])];
    }
    trajectory.push_back(row);
  }
  j["trajectory"] = trajectory;
  const auto& c = scenario.config;
  j["config"] = {{"horizon", c.horizon},
                 {"criticalCount", c.critical_count},
                 {"dispersion", c.dispersion},
                 {"firstOnset", c.first_onset},
                 {"awarenessProb", c.awareness_prob},
                 {"generalAwareness", std::string(to_string(c.general_awareness))}};
  const auto& u = scenario.profile;
  Json flags = Json::object();
  for (PropertyId p : scenario.scheduled) flags[space.property(p).label] = u.aware_flags.at(p);
  j["userProfile"] = {{"criticalAwarenessProb", u.critical_awareness_prob},
                      {"generalAwareness", std::string(to_string(u.general_awareness))},
                      {"awareFlags", flags},
                      {"seed", u.seed}};
  return j;
}

Json belief(const BeliefState& belief, const PropertySpace& space) {
  Json j = Json::object();
  for (std::size_t i = 0; i < space.size(); ++i) {
    const auto row = belief[PropertyId{i}];
    j[space.property(PropertyId{i}).label] = std::vector<double>(row.begin(), row.end());
  }
  return j;
}

Json plan(const PlanResult& result, const Lexicon& lexicon, const PropertySpace& space,
          bool include_beliefs) {
  Json j;
  j["sequence"] = sequence_labels(lexicon, result.sequence);
  j["perStepReward"] = result.per_step_reward;
  j["cumulativeReward"] = result.cumulative_reward;
  j["plannerInternalReward"] = result.planner_internal_reward;
  if (include_beliefs) {
    Json traj = Json::array();
    for (const auto& b : result.belief_trajectory) traj.push_back(belief(b, space));
    j["beliefTrajectory"] = traj;
  }
  return j;
}

Json pragmatics(const PragmaticsConfig& config) {
  Json j;
  j["attentionMode"] = to_string(config.attention_mode);
  if (const auto* logit = std::get_if<LogitUpdate>(&config.belief_update)) {
    j["beliefUpdateMode"] = {{"mode", "Logit"},
                             {"deltaMemory", logit->delta_memory},
                             {"gammaCritical", logit->gamma_critical}};
  } else {
    j["beliefUpdateMode"] = "Linear";
  }
  if (std::holds_alternative<CriticalOnlyReward>(config.reward_mode)) {
    j["rewardMode"] = "CriticalOnly";
  } else if (std::holds_alternative<BeliefDeltaReward>(config.reward_mode)) {
    j["rewardMode"] = "BeliefDelta";
  } else {
    j["rewardMode"] = {{"mode", "AdditiveWeight"},
                       {"omega", std::get<AdditiveWeightReward>(config.reward_mode).omega}};
  }
  j["rationality"] = config.rationality;
  j["silenceAttention"] = config.silence_attention;
  j["priorSmoothing"] = config.prior_smoothing;
  return j;
}

PragmaticsConfig parse_pragmatics(const Json& j) {
  if (!j.is_object()) throw ValidationError("modes must be a JSON object");
  PragmaticsConfig config;
  const auto attention = field_or<std::string>(j, "attentionMode", "Direct");
  if (attention == "Direct") {
    config.attention_mode = AttentionMode::kDirect;
  } else if (attention == "WinnerTakeAll") {
    config.attention_mode = AttentionMode::kWinnerTakeAll;
  } else {
    throw ValidationError("unknown attentionMode " + attention);
  }

  auto mode_name = [](const Json& node) -> std::string {
    if (node.is_string()) return node.get<std::string>();
    if (node.is_object()) return field<std::string>(node, "mode");
    throw ValidationError("mode must be a string or an object with a \"mode\" field");
  };

  if (j.contains("beliefUpdateMode")) {
    const Json& node = j.at("beliefUpdateMode");
    const auto name = mode_name(node);
    if (name == "Linear") {
      config.belief_update = LinearUpdate{};
    } else if (name == "Logit") {
      LogitUpdate logit;
      if (node.is_object()) {
        logit.delta_memory = field_or(node, "deltaMemory", logit.delta_memory);
        logit.gamma_critical = field_or(node, "gammaCritical", logit.gamma_critical);
      }
      config.belief_update = logit;
    } else {
      throw ValidationError("unknown beliefUpdateMode " + name);
    }
  }

  if (j.contains("rewardMode")) {
    const Json& node = j.at("rewardMode");
    const auto name = mode_name(node);
    if (name == "CriticalOnly") {
      config.reward_mode = CriticalOnlyReward{};
    } else if (name == "BeliefDelta") {
      config.reward_mode = BeliefDeltaReward{};
    } else if (name == "AdditiveWeight") {
      AdditiveWeightReward additive;
      if (node.is_object()) additive.omega = field_or(node, "omega", additive.omega);
      config.reward_mode = additive;
    } else {
      throw ValidationError("unknown rewardMode " + name);
    }
  }

  config.rationality = field_or(j, "rationality", config.rationality);
  config.silence_attention = field_or(j, "silenceAttention", config.silence_attention);
  config.prior_smoothing = field_or(j, "priorSmoothing", config.prior_smoothing);
  config.validate();
  return config;
}

}  // namespace json_io

using json_io::Json;

std::string scenario_to_json(const WorldScenario& scenario, const PropertySpace& space) {
  return json_io::scenario(scenario, space).dump(2);
}

WorldScenario scenario_from_json(std::string_view text, const PropertySpace& space) {
  const Json j = json_io::parse(text);
  try {
    WorldScenario s;
    s.seed = j.at("seed").get<std::uint64_t>();
    const int horizon = j.at("horizon").get<int>();

    const auto labels = j.at("properties").get<std::vector<std::string>>();
    if (labels.size() != space.size()) throw ValidationError("property list does not match space");
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] != space.property(PropertyId{i}).label)
        throw ValidationError("property order does not match space");

    for (const auto& label : j.at("scheduled").get<std::vector<std::string>>()) {
      const auto p = space.find(label);
      if (!p) throw ValidationError("unknown property " + label);
      s.scheduled.push_back(*p);
    }
    for (const auto& [label, onset] : j.at("onsets").items()) {
      const auto p = space.find(label);
      if (!p) throw ValidationError("unknown property " + label);
      s.onsets[*p] = onset.get<int>();
    }

    const Json& traj = j.at("trajectory");
    if (!traj.is_array() || static_cast<int>(traj.size()) != horizon)
      throw ValidationError("trajectory length does not match horizon");
    for (const Json& row : traj) {
      std::vector<ValueIndex> state(space.size());
      for (std::size_t i = 0; i < space.size(); ++i) {
        const auto& prop = space.property(PropertyId{i});
        const double v = row.at(prop.label).get<double>();
        const auto it = std::find(prop.values.begin(), prop.values.end(), v);
        if (it == prop.values.end())
          throw ValidationError("value " + std::to_string(v) + " not in domain of " + prop.label);
        state[i] = static_cast<ValueIndex>(it - prop.values.begin());
      }
      s.trajectory.push_back(std::move(state));
    }

    const Json& c = j.at("config");
    s.config.horizon = c.at("horizon").get<int>();
    s.config.critical_count = c.at("criticalCount").get<int>();
    s.config.dispersion = c.at("dispersion").get<int>();
    s.config.first_onset = c.at("firstOnset").get<int>();
    s.config.awareness_prob = c.at("awarenessProb").get<double>();
    const auto ga = parse_general_awareness(c.at("generalAwareness").get<std::string>());
    if (!ga) throw ValidationError("bad generalAwareness");
    s.config.general_awareness = *ga;

    const Json& u = j.at("userProfile");
    s.profile.critical_awareness_prob = u.at("criticalAwarenessProb").get<double>();
    const auto uga = parse_general_awareness(u.at("generalAwareness").get<std::string>());
    if (!uga) throw ValidationError("bad generalAwareness");
    s.profile.general_awareness = *uga;
    s.profile.seed = u.at("seed").get<std::uint64_t>();
    for (const auto& [label, flag] : u.at("awareFlags").items()) {
      const auto p = space.find(label);
      if (!p) throw ValidationError("unknown property " + label);
      s.profile.aware_flags[*p] = flag.get<bool>();
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed scenario: ") + e.what());
  }
}

std::string lexicon_to_json(const Lexicon& lexicon, const PropertySpace& space) {
  Json j;
  Json utterances = Json::array();
  Json meaning = Json::array();
  for (const auto& u : lexicon.utterances()) {
    utterances.push_back({{"id", u.id},
                          {"label", u.label},
                          {"category", std::string(to_string(u.category))},
                          {"duration", u.duration}});
    Json row = Json::array();
    for (std::size_t i = 0; i < space.size(); ++i)
      if (lexicon.means(u.id, PropertyId{i})) row.push_back(space.property(PropertyId{i}).label);
    meaning.push_back(row);
  }
  j["utterances"] = utterances;
  j["meaning"] = meaning;
  return j.dump(2);
}

Lexicon lexicon_from_json(std::string_view text, const PropertySpace& space) {
  const Json j = json_io::parse(text);
  try {
    std::vector<Utterance> utterances;
    for (const Json& u : j.at("utterances")) {
      const auto category = parse_category(u.at("category").get<std::string>());
      if (!category) throw ValidationError("unknown category");
      utterances.push_back({u.at("id").get<int>(), u.at("label").get<std::string>(), *category,
                            u.at("duration").get<int>()});
    }
    std::vector<std::vector<bool>> meaning;
    for (const Json& row : j.at("meaning")) {
      std::vector<bool> mask(space.size(), false);
      for (const Json& label : row) {
        const auto p = space.find(label.get<std::string>());
        if (!p) throw ValidationError("unknown property in meaning matrix");
        mask[p->value] = true;
      }
      meaning.push_back(std::move(mask));
    }
    return Lexicon(std::move(utterances), std::move(meaning));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed lexicon: ") + e.what());
  }
}

std::string belief_to_json(const BeliefState& belief, const PropertySpace& space) {
  return json_io::belief(belief, space).dump(2);
}

std::string plan_to_json(const PlanResult& result, const Lexicon& lexicon,
                         const PropertySpace& space, bool include_beliefs) {
  return json_io::plan(result, lexicon, space, include_beliefs).dump(2);
}

std::string pragmatics_config_to_json(const PragmaticsConfig& config) {
  return json_io::pragmatics(config).dump(2);
}

PragmaticsConfig pragmatics_config_from_json(std::string_view text) {
  try {
    return json_io::parse_pragmatics(json_io::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed modes: ") + e.what());
  }
}

}  // namespace drsa
