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

#include "lnprob/experiment.hpp"
#include "lnprob/graph.hpp"
#include "lnprob/snapshot.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lnprob::cli {

enum class AmountUnit
{
  satoshi,
  mbtc,  ///< 100,000 satoshi
  capacity_fraction
};

inline constexpr Sat kSatPerMbtc = 100'000;

/// Arithmetic grid min, min + step, ..., up to max inclusive.
struct AmountGrid
{
  double     min{1.0};
  double     max{20.0};
  double     step{1.0};
  AmountUnit unit{AmountUnit::mbtc};

  std::vector<double> values() const;

  /// Amounts in satoshi. `capacity` is the reference for capacity-fraction
  /// grids and must then be present.
  std::vector<Sat> resolve(std::optional<Sat> capacity) const;
};

/// Dynamic-mode validation on a fixed line: a funded first hop followed by
/// `uncertain_hops` channels of equal capacity.
struct ForcePath
{
  int         uncertain_hops{2};
  Sat         capacity{3000};
  std::size_t sessions{1000};
};

struct AnalyzeSection
{
  Sat                 capacity{100};
  std::vector<double> sigmas{0.9, 0.99, 0.999};
  int                 path_length{2};  ///< uncertain hops for the split curves
};

struct RebalanceSection
{
  std::optional<std::filesystem::path> output;
  double                               tolerance{1e-9};
  std::size_t                          max_iterations{1'000'000};
};

struct InfogainSection
{
  Sat              capacity{100'000};
  std::size_t      pairs{100};
  AmountGrid       fractions{0.01, 3.0, 0.01, AmountUnit::capacity_fraction};
  std::vector<int> parts{1, 2, 3};
  Arm              arm{"max_likelihood", MaxLikelihoodStrategy{}};
  int              max_attempts{200};
};

struct GenerateSection
{
  SnapshotOptions                      snapshot;
  std::optional<std::filesystem::path> output;
};

struct Config
{
  std::uint64_t                            seed{0};
  unsigned                                 workers{1};
  std::filesystem::path                    output_dir{"out"};
  std::optional<std::filesystem::path>     graph;
  SimulationMode                           mode{SimulationMode::static_balances};
  std::vector<Arm>                         arms;
  GraphLoadOptions                         prior;
  bool                                     sample_balances{false};
  std::size_t                              pair_count{100};
  std::vector<std::pair<std::string, std::string>> pair_list;  ///< overrides pair_count
  AmountGrid                               amounts;
  std::vector<int>                         parts{1};
  double                                   slo{0.999};
  int                                      max_attempts{200};
  std::size_t                              candidate_limit{1000};
  std::size_t                              bootstrap_resamples{2000};
  std::optional<ForcePath>                 force_path;

  AnalyzeSection   analyze;
  RebalanceSection rebalance;
  InfogainSection  infogain;
  GenerateSection  generate;

  /// Effective configuration after overrides, and its hash. Settings that
  /// cannot change results (workers, output_dir) are left out of the hash.
  nlohmann::json document;
  std::string    hash;
};

/// Command-line values that take precedence over the file.
struct Overrides
{
  std::optional<std::uint64_t>         seed;
  std::optional<unsigned>              workers;
  std::optional<std::filesystem::path> output_dir;
  std::vector<std::string>             arms;
  std::optional<std::string>           mode;
  std::optional<std::filesystem::path> graph;
};

/// Reads a TOML (by .toml extension) or JSON file into a JSON document.
/// Throws ConfigError with field "config" on unreadable or malformed input.
nlohmann::json read_config_file(std::filesystem::path const &file);

/// Validates the document, applies overrides and fills defaults. Throws
/// ConfigError naming the offending field, e.g. "amounts.step".
Config make_config(nlohmann::json doc, Overrides const &overrides);

/// 64-bit FNV-1a of `text`, as 16 hex digits.
std::string fnv1a_hex(std::string const &text);

Arm arm_from_name(std::string const &name, std::size_t candidate_count);

std::string to_string(AmountUnit unit);

}  // namespace lnprob::cli
