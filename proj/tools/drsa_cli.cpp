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

// Command-line front end: batch runs, figure tables and trial inspection.
//
//   drsa run --config batch.json [--seed N] [--trials N] [--out DIR] [--workers N] [--traces]
//   drsa figures --records out/records.csv --out figs
//   drsa inspect --trial 17 --records out
//
// Exit codes: 0 success, 1 invalid input, 2 I/O failure.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "drsa/errors.hpp"
#include "drsa/harness.hpp"

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitIo = 2;

struct RunArgs {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<std::string> out;
  std::optional<int> workers;
  bool traces = false;
};

int do_run(const RunArgs& args) {
  drsa::BatchConfig config = args.config.empty() ? drsa::BatchConfig{}
                                                 : drsa::load_batch_config(args.config);
  if (args.seed) config.master_seed = *args.seed;
  if (args.trials) config.n_trials = *args.trials;
  if (args.out) config.output_dir = *args.out;
  if (args.workers) config.workers = *args.workers;
  if (args.traces) config.traces = true;
  config.validate();

  const auto start = std::chrono::steady_clock::now();
  const auto records = drsa::run_batch(config);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  std::cout << "ran " << config.n_trials << " trials (" << records.size() << " records) in "
            << elapsed.count() << " s -> " << config.output_dir.string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Assistive signalling simulator"};
  app.require_subcommand(1);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run a batch of trials");
  run_cmd->add_option("--config", run.config, "Batch config JSON");
  run_cmd->add_option("--seed", run.seed, "Master seed override");
  run_cmd->add_option("--trials", run.trials, "Number of trials override");
  run_cmd->add_option("--out", run.out, "Output directory override");
  run_cmd->add_option("--workers", run.workers, "Worker threads override");
  run_cmd->add_flag("--traces", run.traces, "Write per-trial traces");

  std::string records_csv, figures_out;
  auto* fig_cmd = app.add_subcommand("figures", "Aggregate records into figure tables");
  fig_cmd->add_option("--records", records_csv, "records.csv")->required();
  fig_cmd->add_option("--out", figures_out, "Output directory")->required();

  int trial_id = 0;
  std::string records_dir;
  auto* inspect_cmd = app.add_subcommand("inspect", "Pretty-print one trial");
  inspect_cmd->add_option("--trial", trial_id, "Trial id")->required();
  inspect_cmd->add_option("--records", records_dir, "Directory holding records.json")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*run_cmd) return do_run(run);
    if (*fig_cmd) {
      drsa::emit_figure_data(drsa::read_records_csv(records_csv), figures_out);
      return 0;
    }
    if (*inspect_cmd) {
      std::cout << drsa::inspect_trial(records_dir, trial_id);
      return 0;
    }
  } catch (const drsa::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const drsa::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return 0;
}
