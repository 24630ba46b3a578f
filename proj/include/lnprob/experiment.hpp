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

#include "lnprob/graph.hpp"
#include "lnprob/simulator.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace lnprob {

using NodePair = std::pair<NodeIndex, NodeIndex>;

struct Arm
{
  std::string name;
  Strategy    strategy;
};

struct ExperimentOptions
{
  SimulationMode mode{SimulationMode::static_balances};
  int            max_attempts{200};
  std::size_t    candidate_limit{1000};
  unsigned       workers{1};
  std::uint64_t  seed{0};
};

/// One payment session.
struct SessionRow
{
  std::string arm;
  std::size_t pair_id{0};
  std::string sender;
  std::string receiver;
  Sat         amount{0};
  int         parts{1};
  bool        delivered{false};
  int         attempts{0};
  double      session_info_gain{0.0};
  double      first_path_success_prob{0.0};
  std::string error;  ///< set when the session could not start
};

/// Attempt statistics over delivered sessions of one (amount, parts) cell.
struct CellSummary
{
  Sat         amount{0};
  int         parts{1};
  std::size_t sessions{0};
  std::size_t delivered{0};
  double      mean_attempts{0.0};
  double      median_attempts{0.0};
  double      mean_info_gain{0.0};
};

struct ExperimentTable
{
  std::string              arm;
  std::vector<SessionRow>  rows;  ///< ordered by (pair, amount, parts)
  std::vector<CellSummary> cells;
  double                   mean_attempts{0.0};  ///< over all delivered sessions
};

/**
 * Candidate paths per (sender, receiver, capacity class). Two amounts share a
 * class when no channel capacity lies in between, so they filter the graph
 * identically.
 */
class CandidateCache
{
public:
  CandidateCache(ChannelGraph const &g, std::size_t limit);

  /// Empty when the pair is disconnected at this amount.
  std::vector<Path> const &get(NodeIndex sender, NodeIndex receiver, Sat amount);

  /// Computes every missing entry, in parallel.
  void prefetch(std::vector<std::tuple<NodeIndex, NodeIndex, Sat>> const &keys, unsigned workers);

  std::size_t limit() const noexcept
  {
    return limit_;
  }

private:
  using Key = std::tuple<NodeIndex, NodeIndex, std::size_t>;
  Key key(NodeIndex s, NodeIndex r, Sat amount) const;

  ChannelGraph const                 *g_;
  std::size_t                         limit_;
  std::vector<Sat>                    capacities_;  ///< sorted distinct
  std::map<Key, std::vector<Path>>    paths_;
  std::mutex                          mutex_;
};

/// Random distinct ordered pairs that are connected at amount 1.
std::vector<NodePair> choose_pairs(ChannelGraph const &g, std::size_t count, std::uint64_t seed);

/// Seed of the session for one experiment cell.
std::uint64_t session_seed(std::uint64_t seed, std::size_t pair_id, Sat amount, int parts, std::string const &arm);

/**
 * Runs one session per (pair, amount, parts) for one arm. Sessions run on
 * `options.workers` threads; results do not depend on the worker count.
 * Sessions that cannot start are recorded as undelivered rows.
 */
ExperimentTable run_experiment(ChannelGraph const &g, std::vector<NodePair> const &pairs,
                               std::vector<Sat> const &amounts, std::vector<int> const &parts_list, Arm const &arm,
                               ExperimentOptions const &options, CandidateCache *cache = nullptr);

/// Runs `count` jobs on up to `workers` threads. Job i writes only slot i.
template <class Job>
void parallel_for(std::size_t count, unsigned workers, Job &&job);

double mean(std::vector<double> const &xs);
double median(std::vector<double> xs);

/// Percentage reduction of the mean from `base` to `other`.
double reduction_percent(double base, double other);

/// Paired bootstrap of the relative mean reduction (base - other) / base.
struct BootstrapResult
{
  double estimate{0.0};
  double lower{0.0};  ///< 2.5 % quantile
  double upper{0.0};  ///< 97.5 % quantile
};

BootstrapResult paired_bootstrap_reduction(std::vector<double> const &base, std::vector<double> const &other,
                                           std::size_t resamples, std::uint64_t seed);

}  // namespace lnprob

#include "lnprob/detail/parallel.hpp"
