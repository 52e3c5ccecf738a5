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

#include "drsa/lexicon.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "drsa/errors.hpp"

namespace drsa {

std::string_view to_string(Category category) {
  switch (category) {
    case Category::kTwoFeature: return "TwoFeature";
    case Category::kSingleFeature: return "SingleFeature";
    case Category::kBeep: return "Beep";
    case Category::kSilence: return "Silence";
  }
  return "?";
}

std::optional<Category> parse_category(std::string_view text) {
  for (Category c : {Category::kTwoFeature, Category::kSingleFeature, Category::kBeep,
                     Category::kSilence})
    if (to_string(c) == text) return c;
  return std::nullopt;
}

int category_duration(Category category) {
  switch (category) {
    case Category::kTwoFeature: return 3;
    case Category::kSingleFeature: return 2;
    case Category::kBeep:
    case Category::kSilence: return 1;
  }
  return 1;
}

Lexicon::Lexicon(std::vector<Utterance> utterances, std::vector<std::vector<bool>> meaning)
    : utterances_(std::move(utterances)), meaning_(std::move(meaning)) {
  if (utterances_.empty()) throw ValidationError("lexicon has no utterances");
  if (meaning_.size() != utterances_.size())
    throw ValidationError("meaning matrix needs one row per utterance");
  property_count_ = meaning_.front().size();
  cover_count_.assign(property_count_, 0);

  std::set<std::string> labels;
  std::map<int, int> durations;
  for (std::size_t i = 0; i < utterances_.size(); ++i) {
    const auto& u = utterances_[i];
    const auto& row = meaning_[i];
    if (u.id != static_cast<int>(i)) throw ValidationError("utterance ids must be 0..n-1");
    if (!labels.insert(u.label).second) throw ValidationError("duplicate label " + u.label);
    if (u.label == kBlockLabel) throw ValidationError("(X) is not a selectable utterance");
    if (u.duration != category_duration(u.category))
      throw ValidationError("duration of " + u.label + " disagrees with its category");
    if (row.size() != property_count_) throw ValidationError("ragged meaning matrix");
    const auto ones = std::count(row.begin(), row.end(), true);
    if (u.category == Category::kBeep && ones != static_cast<long>(property_count_))
      throw ValidationError("Beep must mean every property");
    if (u.category == Category::kSilence) {
      if (ones != 0) throw ValidationError("Silence must mean nothing");
      if (silence_) throw ValidationError("at most one Silence utterance");
      silence_ = u.id;
    }
    for (std::size_t p = 0; p < property_count_; ++p)
      if (row[p]) ++cover_count_[p];
    ++durations[u.duration];
  }
  duration_classes_.assign(durations.begin(), durations.end());
}

std::optional<int> Lexicon::find(std::string_view label) const {
  for (const auto& u : utterances_)
    if (u.label == label) return u.id;
  return std::nullopt;
}

std::string_view Lexicon::slot_label(int slot) const {
  if (slot == kBlockSlot) return kBlockLabel;
  return utterance(slot).label;
}

Lexicon build_drone_lexicon(const PropertySpace& space) {
  const std::size_t n = space.size();
  std::vector<Utterance> utterances;
  std::vector<std::vector<bool>> meaning;
  auto add = [&](std::string label, Category category, std::vector<bool> row) {
    const int id = static_cast<int>(utterances.size());
    utterances.push_back({id, std::move(label), category, category_duration(category)});
    meaning.push_back(std::move(row));
  };

  for (std::size_t i = 0; i < n; ++i) {
    const auto& prop = space.property(PropertyId{i});
    std::vector<bool> row(n, false);
    row[i] = true;
    add("D" + std::to_string(prop.drone) + " " +
            std::string(attribute_display_name(prop.attribute)),
        Category::kTwoFeature, std::move(row));
  }
  for (Attribute attr : kAttributes) {
    std::vector<bool> row(n, false);
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (space.property(PropertyId{i}).attribute == attr) row[i] = any = true;
    }
    if (any) add(std::string(attribute_display_name(attr)), Category::kSingleFeature, std::move(row));
  }
  add("Beep", Category::kBeep, std::vector<bool>(n, true));
  add("...", Category::kSilence, std::vector<bool>(n, false));
  return Lexicon(std::move(utterances), std::move(meaning));
}

bool is_legal(const Lexicon& lexicon, const SlotSequence& sequence, int horizon) {
  if (static_cast<int>(sequence.size()) != horizon) return false;
  int t = 0;
  while (t < horizon) {
    const int slot = sequence[static_cast<std::size_t>(t)];
    if (slot < 0 || static_cast<std::size_t>(slot) >= lexicon.size()) return false;
    const int k = lexicon.utterance(slot).duration;
    if (t + k > horizon) return false;
    for (int j = 1; j < k; ++j)
      if (sequence[static_cast<std::size_t>(t + j)] != kBlockSlot) return false;
    t += k;
  }
  return true;
}

namespace {

void enumerate_from(const Lexicon& lexicon, int horizon, int t, SlotSequence& seq,
                    const std::function<void(const SlotSequence&)>& visit) {
  if (t == horizon) {
    visit(seq);
    return;
  }
  for (const auto& u : lexicon.utterances()) {
    if (t + u.duration > horizon) continue;
    seq[static_cast<std::size_t>(t)] = u.id;
    for (int j = 1; j < u.duration; ++j) seq[static_cast<std::size_t>(t + j)] = kBlockSlot;
    enumerate_from(lexicon, horizon, t + u.duration, seq, visit);
  }
}

}  // namespace

void for_each_legal_sequence(const Lexicon& lexicon, int horizon,
                             const std::function<void(const SlotSequence&)>& visit) {
  if (horizon < 1) throw ValidationError("horizon must be >= 1");
  SlotSequence seq(static_cast<std::size_t>(horizon), kBlockSlot);
  enumerate_from(lexicon, horizon, 0, seq, visit);
}

std::vector<SlotSequence> legal_sequences(const Lexicon& lexicon, int horizon) {
  std::vector<SlotSequence> out;
  for_each_legal_sequence(lexicon, horizon, [&](const SlotSequence& s) { out.push_back(s); });
  return out;
}

std::uint64_t count_legal_sequences(const Lexicon& lexicon, int horizon) {
  if (horizon < 0) return 0;
  std::vector<std::uint64_t> f(static_cast<std::size_t>(horizon) + 1, 0);
  f[0] = 1;
  for (int n = 1; n <= horizon; ++n) {
    for (auto [duration, members] : lexicon.duration_classes())
      if (n - duration >= 0)
        f[static_cast<std::size_t>(n)] +=
            static_cast<std::uint64_t>(members) * f[static_cast<std::size_t>(n - duration)];
  }
  return f[static_cast<std::size_t>(horizon)];
}

std::vector<std::string> sequence_labels(const Lexicon& lexicon, const SlotSequence& sequence) {
  std::vector<std::string> out;
  out.reserve(sequence.size());
  for (int slot : sequence) out.emplace_back(lexicon.slot_label(slot));
  return out;
}

}  // namespace drsa
