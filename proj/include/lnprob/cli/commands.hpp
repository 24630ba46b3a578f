#pragma once
//------------------------------------------------------------------------------
//
//   Copyright 2026 The lnprob Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include "lnprob/cli/config.hpp"
#include "lnprob/experiment.hpp"
#include "lnprob/rebalance.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <vector>

namespace lnprob::cli {

/// Process exit codes.
enum ExitCode : int
{
  exit_ok        = 0,
  exit_config    = 2,
  exit_data      = 3,
  exit_invariant = 4
};

/// Writes one CSV per closed-form figure into the output directory and
/// returns their paths.
std::vector<std::filesystem::path> cmd_analyze(Config const &cfg);

struct SimulateResult
{
  std::vector<ExperimentTable> tables;  ///< one per arm, in config order
  nlohmann::json               summary;
  std::filesystem::path        sessions_csv;
  std::filesystem::path        summary_json;
};

/// Runs every arm over the same pairs and amounts; writes sessions.csv and
/// summary.json.
SimulateResult cmd_simulate(Config const &cfg);

struct RebalanceOutcome
{
  RebalanceResult       result;
  double                variance_before{0.0};
  double                variance_after{0.0};
  std::filesystem::path graph_out;
  std::filesystem::path histogram_csv;
  std::filesystem::path summary_json;
};

/// Rebalances the configured graph; writes the new graph, a 20-bin b/c
/// histogram before and after, and rebalance.json.
RebalanceOutcome cmd_rebalance(Config const &cfg);

struct InfogainPoint
{
  double      fraction{0.0};
  Sat         amount{0};
  int         parts{1};
  double      median_gain{0.0};
  std::size_t sessions{0};
  std::size_t delivered{0};
};

struct InfogainResult
{
  std::vector<InfogainPoint> points;  ///< ordered by (fraction, parts)
  std::filesystem::path      csv;
};

/// Median session information gain per amount fraction and part count on a
/// constant-capacity copy of the configured (or generated) topology.
InfogainResult cmd_infogain(Config const &cfg);

/// Writes a synthetic snapshot and returns its path.
std::filesystem::path cmd_generate(Config const &cfg);

/// Full command line entry point. Returns the process exit code.
int run_cli(int argc, char const *const *argv, std::ostream &out, std::ostream &err);

}  // namespace lnprob::cli
