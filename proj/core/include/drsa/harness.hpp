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

#ifndef DRSA_HARNESS_HPP_
#define DRSA_HARNESS_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "drsa/lexicon.hpp"
#include "drsa/planner.hpp"
#include "drsa/pragmatics.hpp"
#include "drsa/world.hpp"

namespace drsa {

struct BatchConfig {
  int n_trials = 800;
  int horizon = kDefaultHorizon;
  std::vector<int> critical_counts = {2, 3, 4};
  std::vector<int> dispersions = {0, 1, 2, 3};
  std::vector<double> awareness_probs = {0.10, 0.25, 0.50, 0.80};
  std::vector<GeneralAwareness> general_awareness = {GeneralAwareness::kLow,
                                                     GeneralAwareness::kHigh};
  std::uint64_t master_seed = 20250101;
  PragmaticsConfig modes;
  std::filesystem::path output_dir = "out";
  int workers = 1;
  bool traces = false;

  // Throws ValidationError.
  void validate() const;
};

// JSON keys mirror the field names: nTrials, horizon, criticalCounts,
// dispersions, awarenessProbs, generalAwareness, masterSeed, modes,
// outputDir, workers, traces. Missing keys keep their defaults.
BatchConfig batch_config_from_json(std::string_view text);
std::string batch_config_to_json(const BatchConfig& config);
// Throws IoError when unreadable, ValidationError when malformed.
BatchConfig load_batch_config(const std::filesystem::path& path);

struct TrialSpec {
  int trial_id = 0;
  std::uint64_t seed = 0;
  ScenarioConfig scenario;
};

std::uint64_t trial_seed(std::uint64_t master_seed, int trial_id);

// Factor levels cycle in mixed radix over (criticalCount, dispersion,
// awarenessProb, generalAwareness) so every level appears equally often.
// The first onset is drawn uniformly from {1, 2, 3} with the trial seed.
std::vector<TrialSpec> make_trial_grid(const BatchConfig& config);

struct TrialRecord {
  int trial_id = 0;
  std::uint64_t seed = 0;
  int critical_count = 0;
  int dispersion = 0;
  int first_onset = 0;
  double overlap = 0.0;
  double awareness_prob = 0.0;
  GeneralAwareness general_awareness = GeneralAwareness::kHigh;
  std::string variant;
  double cumulative_reward = 0.0;
  double message_entropy = 0.0;
  double specificity_ratio = 0.0;
  double median_delay_low = 0.0;   // NaN when the user knew every critical property
  double median_delay_high = 0.0;  // NaN when the user knew none
  double prioritisation_difference = 0.0;
  std::vector<std::string> sequence;
};

struct TrialOutcome {
  TrialSpec spec;
  WorldScenario scenario;
  BeliefState initial;
  std::array<PlanResult, 4> plans;  // kVariants order
  std::array<TrialRecord, 4> records;
};

TrialOutcome run_trial(const TrialSpec& spec, const PragmaticsConfig& modes,
                       const PropertySpace& space, const Lexicon& lexicon,
                       const BeliefObserver* observer = nullptr);

// Runs every trial on `config.workers` threads. When `write_outputs` is set,
// checks that the output directory is writable before any computation, then
// writes records.csv, records.json, the figure tables and (optionally)
// traces/. Results do not depend on the worker count.
std::vector<TrialRecord> run_batch(const BatchConfig& config, bool write_outputs = true);

inline constexpr std::string_view kRecordsCsvHeader =
    "trialId,seed,criticalCount,dispersion,firstOnset,overlap,q,generalAwareness,variant,"
    "cumulativeReward,messageEntropy,specificityRatio,medianDelayLowAwareness,"
    "medianDelayHighAwareness,prioritisationDifference,sequence";

std::string records_to_csv(const std::vector<TrialRecord>& records);
std::vector<TrialRecord> records_from_csv(std::string_view text);
std::vector<TrialRecord> read_records_csv(const std::filesystem::path& path);

enum class Figure { kRewardByCriticalCount, kRewardByDispersion, kSpecificityByAwareness,
                    kDelayLowByCriticalCount };
inline constexpr std::array<Figure, 4> kFigures = {
    Figure::kRewardByCriticalCount, Figure::kRewardByDispersion, Figure::kSpecificityByAwareness,
    Figure::kDelayLowByCriticalCount};

std::string_view figure_file_name(Figure figure);

struct FigureRow {
  std::string level;
  std::string variant;
  double mean = 0.0;
  double standard_error = 0.0;
  int n = 0;
};

// Mean and standard error of the figure's metric per (factor level,
// variant). NaN metric values are skipped.
std::vector<FigureRow> figure_table(const std::vector<TrialRecord>& records, Figure figure);

// Writes fig2a.csv .. fig3b.csv. Throws ValidationError on empty input,
// IoError when the directory cannot be written.
void emit_figure_data(const std::vector<TrialRecord>& records,
                      const std::filesystem::path& output_dir);

// Regenerates the trial behind `record` and replays its stored sequence
// under the evaluation dynamics.
PlanResult replay_record(const TrialRecord& record, const BatchConfig& config,
                         const PropertySpace& space, const Lexicon& lexicon);

// Human-readable sequences and per-step rewards of one trial's four variants,
// read from a run's output directory.
std::string inspect_trial(const std::filesystem::path& records_dir, int trial_id);

}  // namespace drsa

#endif  // DRSA_HARNESS_HPP_
