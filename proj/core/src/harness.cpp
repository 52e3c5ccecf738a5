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

#include "drsa/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "drsa/errors.hpp"
#include "drsa/metrics.hpp"
#include "drsa/random.hpp"
#include "drsa/stats.hpp"
#include "drsa/user_model.hpp"
#include "json_io.hpp"

namespace drsa {

using json_io::Json;

namespace {

std::string format_number(double x) {
  if (std::isnan(x)) return "NA";
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return ec == std::errc() ? std::string(buf, end) : std::to_string(x);
}

double parse_number(std::string_view text) {
  if (text == "NA" || text == "nan" || text.empty()) return std::nan("");
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ValidationError("bad number in records: " + std::string(text));
  return x;
}

template <typename Int>
Int parse_integer(std::string_view text) {
  Int x{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ValidationError("bad integer in records: " + std::string(text));
  return x;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? text.npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << content;
  if (!out) throw IoError("write failed for " + path.string());
}

void prepare_output_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  const auto probe = dir / ".drsa_write_probe";
  write_file(probe, "");
  std::filesystem::remove(probe, ec);
}

template <typename T>
T json_field(const Json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad field ") + key + ": " + e.what());
  }
}

Json record_to_json(const TrialRecord& r) {
  auto number = [](double x) -> Json { return std::isnan(x) ? Json(nullptr) : Json(x); };
  Json j;
  j["trialId"] = r.trial_id;
  j["seed"] = r.seed;
  j["criticalCount"] = r.critical_count;
  j["dispersion"] = r.dispersion;
  j["firstOnset"] = r.first_onset;
  j["overlap"] = r.overlap;
  j["q"] = r.awareness_prob;
  j["generalAwareness"] = std::string(to_string(r.general_awareness));
  j["variant"] = r.variant;
  j["cumulativeReward"] = r.cumulative_reward;
  j["messageEntropy"] = r.message_entropy;
  j["specificityRatio"] = r.specificity_ratio;
  j["medianDelayLowAwareness"] = number(r.median_delay_low);
  j["medianDelayHighAwareness"] = number(r.median_delay_high);
  j["prioritisationDifference"] = r.prioritisation_difference;
  j["sequence"] = r.sequence;
  return j;
}

TrialRecord record_from_json(const Json& j) {
  auto number = [&](const char* key) {
    const Json& v = j.at(key);
    return v.is_null() ? std::nan("") : v.get<double>();
  };
  TrialRecord r;
  r.trial_id = j.at("trialId").get<int>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.critical_count = j.at("criticalCount").get<int>();
  r.dispersion = j.at("dispersion").get<int>();
  r.first_onset = j.at("firstOnset").get<int>();
  r.overlap = j.at("overlap").get<double>();
  r.awareness_prob = j.at("q").get<double>();
  const auto ga = parse_general_awareness(j.at("generalAwareness").get<std::string>());
  if (!ga) throw ValidationError("bad generalAwareness in records");
  r.general_awareness = *ga;
  r.variant = j.at("variant").get<std::string>();
  r.cumulative_reward = j.at("cumulativeReward").get<double>();
  r.message_entropy = j.at("messageEntropy").get<double>();
  r.specificity_ratio = j.at("specificityRatio").get<double>();
  r.median_delay_low = number("medianDelayLowAwareness");
  r.median_delay_high = number("medianDelayHighAwareness");
  r.prioritisation_difference = j.at("prioritisationDifference").get<double>();
  r.sequence = j.at("sequence").get<std::vector<std::string>>();
  return r;
}

Json batch_config_json(const BatchConfig& c) {
  Json j;
  j["nTrials"] = c.n_trials;
  j["horizon"] = c.horizon;
  j["criticalCounts"] = c.critical_counts;
  j["dispersions"] = c.dispersions;
  j["awarenessProbs"] = c.awareness_probs;
  Json ga = Json::array();
  for (auto level : c.general_awareness) ga.push_back(std::string(to_string(level)));
  j["generalAwareness"] = ga;
  j["masterSeed"] = c.master_seed;
  j["modes"] = json_io::pragmatics(c.modes);
  j["outputDir"] = c.output_dir.string();
  j["workers"] = c.workers;
  j["traces"] = c.traces;
  return j;
}

BatchConfig batch_config_from(const Json& j) {
  if (!j.is_object()) throw ValidationError("batch config must be a JSON object");
  BatchConfig c;
  c.n_trials = json_field(j, "nTrials", c.n_trials);
  c.horizon = json_field(j, "horizon", c.horizon);
  c.critical_counts = json_field(j, "criticalCounts", c.critical_counts);
  c.dispersions = json_field(j, "dispersions", c.dispersions);
  c.awareness_probs = json_field(j, "awarenessProbs", c.awareness_probs);
  if (j.contains("generalAwareness")) {
    c.general_awareness.clear();
    for (const auto& name : json_field<std::vector<std::string>>(j, "generalAwareness", {})) {
      const auto level = parse_general_awareness(name);
      if (!level) throw ValidationError("unknown generalAwareness " + name);
      c.general_awareness.push_back(*level);
    }
  }
  c.master_seed = json_field(j, "masterSeed", c.master_seed);
  if (j.contains("modes")) c.modes = json_io::parse_pragmatics(j.at("modes"));
  c.output_dir = json_field(j, "outputDir", c.output_dir.string());
  c.workers = json_field(j, "workers", c.workers);
  c.traces = json_field(j, "traces", c.traces);
  c.validate();
  return c;
}

std::string level_string(double x) { return format_number(x); }

}  // namespace

void BatchConfig::validate() const {
  if (n_trials < 1) throw ValidationError("nTrials must be positive");
  if (horizon < 1 || horizon > kMaxPlanningHorizon)
    throw ValidationError("horizon must be in 1.." + std::to_string(kMaxPlanningHorizon));
  if (workers < 1) throw ValidationError("workers must be positive");
  auto check_levels = [](const auto& levels, const char* name, auto allowed) {
    if (levels.empty()) throw ValidationError(std::string(name) + " must not be empty");
    for (const auto& level : levels)
      if (!allowed(level)) throw ValidationError(std::string("invalid level in ") + name);
  };
  check_levels(critical_counts, "criticalCounts", [](int x) { return x >= 2 && x <= 4; });
  check_levels(dispersions, "dispersions", [](int x) { return x >= 0 && x <= 3; });
  check_levels(awareness_probs, "awarenessProbs",
               [](double x) { return x >= 0.0 && x <= 1.0; });
  check_levels(general_awareness, "generalAwareness", [](GeneralAwareness) { return true; });
  modes.validate();
}

BatchConfig batch_config_from_json(std::string_view text) {
  try {
    return batch_config_from(json_io::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed batch config: ") + e.what());
  }
}

std::string batch_config_to_json(const BatchConfig& config) {
  return batch_config_json(config).dump(2);
}

BatchConfig load_batch_config(const std::filesystem::path& path) {
  return batch_config_from_json(read_file(path));
}

std::uint64_t trial_seed(std::uint64_t master_seed, int trial_id) {
  return mix_seed(master_seed, static_cast<std::uint64_t>(trial_id));
}

std::vector<TrialSpec> make_trial_grid(const BatchConfig& config) {
  config.validate();
  const std::size_t a = config.critical_counts.size();
  const std::size_t b = config.dispersions.size();
  const std::size_t c = config.awareness_probs.size();
  const std::size_t d = config.general_awareness.size();
  std::vector<TrialSpec> grid;
  grid.reserve(static_cast<std::size_t>(config.n_trials));
  for (int id = 0; id < config.n_trials; ++id) {
    const auto i = static_cast<std::size_t>(id);
    TrialSpec spec;
    spec.trial_id = id;
    spec.seed = trial_seed(config.master_seed, id);
    spec.scenario.horizon = config.horizon;
    spec.scenario.critical_count = config.critical_counts[i % a];
    spec.scenario.dispersion = config.dispersions[(i / a) % b];
    spec.scenario.awareness_prob = config.awareness_probs[(i / (a * b)) % c];
    spec.scenario.general_awareness = config.general_awareness[(i / (a * b * c)) % d];
    Rng rng(mix_seed(spec.seed, 0xF1257ULL));
    std::uniform_int_distribution<int> onset(1, std::min(3, config.horizon));
    spec.scenario.first_onset = onset(rng);
    grid.push_back(spec);
  }
  return grid;
}

TrialOutcome run_trial(const TrialSpec& spec, const PragmaticsConfig& modes,
                       const PropertySpace& space, const Lexicon& lexicon,
                       const BeliefObserver* observer) {
  TrialOutcome out;
  out.spec = spec;
  out.scenario = generate_scenario(space, spec.scenario, spec.seed);
  out.initial = initial_beliefs(out.scenario, out.scenario.profile, space);
  if (observer != nullptr && *observer) (*observer)(out.initial);
  const PlanningProblem problem{space, lexicon, out.scenario, out.initial};
  const double overlap = overlap_metric(space, out.scenario.scheduled);

  for (std::size_t v = 0; v < kVariants.size(); ++v) {
    out.plans[v] = plan(problem, kVariants[v], modes, observer);
    const auto& result = out.plans[v];
    const auto delays = alert_delays(result, out.scenario, out.initial, lexicon);

    TrialRecord& r = out.records[v];
    r.trial_id = spec.trial_id;
    r.seed = spec.seed;
    r.critical_count = spec.scenario.critical_count;
    r.dispersion = spec.scenario.dispersion;
    r.first_onset = spec.scenario.first_onset;
    r.overlap = overlap;
    r.awareness_prob = spec.scenario.awareness_prob;
    r.general_awareness = spec.scenario.general_awareness;
    r.variant = std::string(kVariants[v].name());
    r.cumulative_reward = result.cumulative_reward;
    r.message_entropy = message_entropy(lexicon, result.sequence);
    r.specificity_ratio = specificity_ratio(lexicon, result.sequence);
    r.median_delay_low = delays.median_low;
    r.median_delay_high = delays.median_high;
    r.prioritisation_difference = delays.prioritisation;
    r.sequence = sequence_labels(lexicon, result.sequence);
  }
  return out;
}

namespace {

struct TrialOutput {
  std::array<TrialRecord, 4> records;
  std::string trace;
};

Json trace_json(const TrialOutcome& outcome, const PropertySpace& space,
                const Lexicon& lexicon) {
  Json j;
  j["trialId"] = outcome.spec.trial_id;
  j["scenario"] = json_io::scenario(outcome.scenario, space);
  j["initialBeliefs"] = json_io::belief(outcome.initial, space);
  Json variants = Json::object();
  for (std::size_t v = 0; v < kVariants.size(); ++v)
    variants[std::string(kVariants[v].name())] =
        json_io::plan(outcome.plans[v], lexicon, space, true);
  j["variants"] = variants;
  return j;
}

}  // namespace

std::vector<TrialRecord> run_batch(const BatchConfig& config, bool write_outputs) {
  config.validate();
  if (write_outputs) {
    prepare_output_dir(config.output_dir);
    if (config.traces) prepare_output_dir(config.output_dir / "traces");
  }

  const PropertySpace space = make_drone_world();
  const Lexicon lexicon = build_drone_lexicon(space);
  const auto grid = make_trial_grid(config);
  std::vector<std::optional<TrialOutput>> outputs(grid.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= grid.size()) return;
      try {
        auto outcome = run_trial(grid[i], config.modes, space, lexicon);
        TrialOutput output{outcome.records, {}};
        if (write_outputs && config.traces)
          output.trace = trace_json(outcome, space, lexicon).dump(2);
        outputs[i] = std::move(output);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(grid.size());
        return;
      }
    }
  };
  const int n_workers = std::min<int>(config.workers, static_cast<int>(grid.size()));
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(n_workers));
    for (int w = 0; w < n_workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<TrialRecord> records;
  records.reserve(grid.size() * kVariants.size());
  for (const auto& output : outputs)
    records.insert(records.end(), output->records.begin(), output->records.end());

  if (write_outputs) {
    write_file(config.output_dir / "records.csv", records_to_csv(records));
    Json doc;
    doc["config"] = batch_config_json(config);
    Json list = Json::array();
    for (const auto& r : records) list.push_back(record_to_json(r));
    doc["records"] = list;
    write_file(config.output_dir / "records.json", doc.dump(2));
    emit_figure_data(records, config.output_dir);
    if (config.traces) {
      for (std::size_t i = 0; i < grid.size(); ++i)
        write_file(config.output_dir / "traces" /
                       ("trial_" + std::to_string(grid[i].trial_id) + ".json"),
                   outputs[i]->trace);
    }
  }
  return records;
}

std::string records_to_csv(const std::vector<TrialRecord>& records) {
  std::string out(kRecordsCsvHeader);
  out += '\n';
  for (const auto& r : records) {
    std::string seq;
    for (std::size_t i = 0; i < r.sequence.size(); ++i) {
      if (i > 0) seq += '|';
      seq += r.sequence[i];
    }
    out += std::to_string(r.trial_id) + ',' + std::to_string(r.seed) + ',' +
           std::to_string(r.critical_count) + ',' + std::to_string(r.dispersion) + ',' +
           std::to_string(r.first_onset) + ',' + format_number(r.overlap) + ',' +
           format_number(r.awareness_prob) + ',' + std::string(to_string(r.general_awareness)) +
           ',' + r.variant + ',' + format_number(r.cumulative_reward) + ',' +
           format_number(r.message_entropy) + ',' + format_number(r.specificity_ratio) + ',' +
           format_number(r.median_delay_low) + ',' + format_number(r.median_delay_high) + ',' +
           format_number(r.prioritisation_difference) + ',' + seq + '\n';
  }
  return out;
}

std::vector<TrialRecord> records_from_csv(std::string_view text) {
  auto lines = split(text, '\n');
  if (lines.empty() || lines.front() != kRecordsCsvHeader)
    throw ValidationError("records CSV header mismatch");
  std::vector<TrialRecord> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto line = lines[i];
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 16) throw ValidationError("records CSV row has wrong field count");
    TrialRecord r;
    r.trial_id = parse_integer<int>(f[0]);
    r.seed = parse_integer<std::uint64_t>(f[1]);
    r.critical_count = parse_integer<int>(f[2]);
    r.dispersion = parse_integer<int>(f[3]);
    r.first_onset = parse_integer<int>(f[4]);
    r.overlap = parse_number(f[5]);
    r.awareness_prob = parse_number(f[6]);
    const auto ga = parse_general_awareness(f[7]);
    if (!ga) throw ValidationError("bad generalAwareness in records");
    r.general_awareness = *ga;
    r.variant = std::string(f[8]);
    r.cumulative_reward = parse_number(f[9]);
    r.message_entropy = parse_number(f[10]);
    r.specificity_ratio = parse_number(f[11]);
    r.median_delay_low = parse_number(f[12]);
    r.median_delay_high = parse_number(f[13]);
    r.prioritisation_difference = parse_number(f[14]);
    if (!f[15].empty())
      for (auto label : split(f[15], '|')) r.sequence.emplace_back(label);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<TrialRecord> read_records_csv(const std::filesystem::path& path) {
  return records_from_csv(read_file(path));
}

std::string_view figure_file_name(Figure figure) {
  switch (figure) {
    case Figure::kRewardByCriticalCount: return "fig2a.csv";
    case Figure::kRewardByDispersion: return "fig2b.csv";
    case Figure::kSpecificityByAwareness: return "fig3a.csv";
    case Figure::kDelayLowByCriticalCount: return "fig3b.csv";
  }
  return "fig.csv";
}

namespace {

std::string_view figure_factor_name(Figure figure) {
  switch (figure) {
    case Figure::kRewardByCriticalCount:
    case Figure::kDelayLowByCriticalCount: return "criticalCount";
    case Figure::kRewardByDispersion: return "dispersion";
    case Figure::kSpecificityByAwareness: return "q";
  }
  return "level";
}

double figure_level(const TrialRecord& r, Figure figure) {
  switch (figure) {
    case Figure::kRewardByCriticalCount:
    case Figure::kDelayLowByCriticalCount: return r.critical_count;
    case Figure::kRewardByDispersion: return r.dispersion;
    case Figure::kSpecificityByAwareness: return r.awareness_prob;
  }
  return 0.0;
}

double figure_metric(const TrialRecord& r, Figure figure) {
  switch (figure) {
    case Figure::kRewardByCriticalCount:
    case Figure::kRewardByDispersion: return r.cumulative_reward;
    case Figure::kSpecificityByAwareness: return r.specificity_ratio;
    case Figure::kDelayLowByCriticalCount: return r.median_delay_low;
  }
  return 0.0;
}

int variant_rank(const std::string& name) {
  for (std::size_t v = 0; v < kVariants.size(); ++v)
    if (kVariants[v].name() == name) return static_cast<int>(v);
  return static_cast<int>(kVariants.size());
}

}  // namespace

std::vector<FigureRow> figure_table(const std::vector<TrialRecord>& records, Figure figure) {
  // Key: (level, variant rank, variant name) keeps rows sorted by level then
  // the canonical variant order.
  std::map<std::tuple<double, int, std::string>, std::vector<double>> groups;
  for (const auto& r : records) {
    auto& bucket = groups[{figure_level(r, figure), variant_rank(r.variant), r.variant}];
    const double x = figure_metric(r, figure);
    if (!std::isnan(x)) bucket.push_back(x);
  }
  std::vector<FigureRow> rows;
  for (const auto& [key, xs] : groups) {
    FigureRow row;
    row.level = level_string(std::get<0>(key));
    row.variant = std::get<2>(key);
    row.n = static_cast<int>(xs.size());
    row.mean = xs.empty() ? std::nan("") : stats::mean(xs);
    row.standard_error = stats::standard_error(xs);
    rows.push_back(std::move(row));
  }
  return rows;
}

void emit_figure_data(const std::vector<TrialRecord>& records,
                      const std::filesystem::path& output_dir) {
  if (records.empty()) throw ValidationError("no records to aggregate");
  prepare_output_dir(output_dir);
  for (Figure figure : kFigures) {
    std::string csv = std::string(figure_factor_name(figure)) + ",variant,mean,se,n\n";
    for (const auto& row : figure_table(records, figure))
      csv += row.level + ',' + row.variant + ',' + format_number(row.mean) + ',' +
             format_number(row.standard_error) + ',' + std::to_string(row.n) + '\n';
    write_file(output_dir / figure_file_name(figure), csv);
  }
}

PlanResult replay_record(const TrialRecord& record, const BatchConfig& config,
                         const PropertySpace& space, const Lexicon& lexicon) {
  ScenarioConfig sc;
  sc.horizon = config.horizon;
  sc.critical_count = record.critical_count;
  sc.dispersion = record.dispersion;
  sc.first_onset = record.first_onset;
  sc.awareness_prob = record.awareness_prob;
  sc.general_awareness = record.general_awareness;
  const auto scenario = generate_scenario(space, sc, record.seed);
  const auto initial = initial_beliefs(scenario, scenario.profile, space);

  SlotSequence sequence;
  for (const auto& label : record.sequence) {
    if (label == kBlockLabel) {
      sequence.push_back(kBlockSlot);
      continue;
    }
    const auto id = lexicon.find(label);
    if (!id) throw ValidationError("unknown utterance " + label);
    sequence.push_back(*id);
  }
  return evaluate(PlanningProblem{space, lexicon, scenario, initial}, sequence, config.modes);
}

std::string inspect_trial(const std::filesystem::path& records_dir, int trial_id) {
  const Json doc = json_io::parse(read_file(records_dir / "records.json"));
  BatchConfig config;
  std::vector<TrialRecord> matches;
  try {
    config = batch_config_from(doc.at("config"));
    for (const Json& j : doc.at("records"))
      if (j.at("trialId").get<int>() == trial_id) matches.push_back(record_from_json(j));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed records.json: ") + e.what());
  }
  if (matches.empty()) throw ValidationError("no records for trial " + std::to_string(trial_id));

  const PropertySpace space = make_drone_world();
  const Lexicon lexicon = build_drone_lexicon(space);
  std::ostringstream out;
  const auto& first = matches.front();
  ScenarioConfig sc;
  sc.horizon = config.horizon;
  sc.critical_count = first.critical_count;
  sc.dispersion = first.dispersion;
  sc.first_onset = first.first_onset;
  sc.awareness_prob = first.awareness_prob;
  sc.general_awareness = first.general_awareness;
  const auto scenario = generate_scenario(space, sc, first.seed);

  out << "trial " << trial_id << "  seed " << first.seed << "  q " << format_number(first.awareness_prob)
      << "  general awareness " << to_string(first.general_awareness) << '\n';
  out << "critical:";
  for (PropertyId p : scenario.scheduled)
    out << ' ' << space.property(p).label << "@" << *scenario.onset(p)
        << (scenario.profile.aware_flags.at(p) ? "(aware)" : "(unaware)");
  out << '\n';
  for (const auto& r : matches) {
    const auto replay = replay_record(r, config, space, lexicon);
    out << '\n' << r.variant << "  total " << format_number(r.cumulative_reward) << '\n';
    out << "  sequence:";
    for (const auto& label : r.sequence) out << " [" << label << ']';
    out << "\n  rewards: ";
    for (double x : replay.per_step_reward) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), " %.3f", x);
      out << buf;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace drsa
