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

#ifndef DRSA_LEXICON_HPP_
#define DRSA_LEXICON_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "drsa/property.hpp"
#include "drsa/world.hpp"

namespace drsa {

enum class Category { kTwoFeature, kSingleFeature, kBeep, kSilence };

std::string_view to_string(Category category);
std::optional<Category> parse_category(std::string_view text);
// Delivery length implied by the category: 3, 2, 1, 1.
int category_duration(Category category);

struct Utterance {
  int id = 0;
  std::string label;
  Category category = Category::kBeep;
  int duration = 1;

  friend bool operator==(const Utterance&, const Utterance&) = default;
};

// Slot value for the non-selectable filler occupying the tail of a
// multi-step delivery.
inline constexpr int kBlockSlot = -1;
inline constexpr std::string_view kBlockLabel = "(X)";

// Each slot holds an utterance id or kBlockSlot.
using SlotSequence = std::vector<int>;

// Utterance inventory plus the boolean meaning matrix (|U| x |P|).
class Lexicon {
 public:
  // Throws ValidationError when ids are not 0..n-1 in order, labels repeat,
  // durations disagree with categories, or the Beep/Silence rows are not
  // all-ones/all-zeros.
  Lexicon(std::vector<Utterance> utterances, std::vector<std::vector<bool>> meaning);

  std::size_t size() const { return utterances_.size(); }
  std::size_t property_count() const { return property_count_; }
  const std::vector<Utterance>& utterances() const { return utterances_; }
  const Utterance& utterance(int id) const { return utterances_.at(static_cast<std::size_t>(id)); }
  bool means(int id, PropertyId p) const { return meaning_.at(static_cast<std::size_t>(id))[p.value]; }
  const std::vector<bool>& meaning_row(int id) const {
    return meaning_.at(static_cast<std::size_t>(id));
  }
  // Number of utterances whose meaning contains p.
  int cover_count(PropertyId p) const { return cover_count_.at(p.value); }

  std::optional<int> find(std::string_view label) const;
  std::optional<int> silence_id() const { return silence_; }
  // Distinct durations in ascending order, with the number of utterances of each.
  const std::vector<std::pair<int, int>>& duration_classes() const { return duration_classes_; }

  // "(X)" for kBlockSlot, else the utterance label.
  std::string_view slot_label(int slot) const;

 private:
  std::vector<Utterance> utterances_;
  std::vector<std::vector<bool>> meaning_;
  std::size_t property_count_ = 0;
  std::vector<int> cover_count_;
  std::optional<int> silence_;
  std::vector<std::pair<int, int>> duration_classes_;
};

// 24 "D<n> <Attribute>" alerts, 6 attribute-level alerts, "Beep" and "...".
Lexicon build_drone_lexicon(const PropertySpace& space);

// True when every multi-step utterance is followed by exactly duration-1
// block slots, no block appears elsewhere, and nothing overruns `horizon`.
bool is_legal(const Lexicon& lexicon, const SlotSequence& sequence, int horizon);

// Visits every legal sequence once, in slot-major / utterance-id-minor
// lexicographic order. The reference passed to `visit` is reused.
void for_each_legal_sequence(const Lexicon& lexicon, int horizon,
                             const std::function<void(const SlotSequence&)>& visit);

std::vector<SlotSequence> legal_sequences(const Lexicon& lexicon, int horizon);

// Closed-form count via the duration recurrence.
std::uint64_t count_legal_sequences(const Lexicon& lexicon, int horizon);

std::vector<std::string> sequence_labels(const Lexicon& lexicon, const SlotSequence& sequence);

}  // namespace drsa

#endif  // DRSA_LEXICON_HPP_
