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

#include "lnprob/belief.hpp"
#include "lnprob/graph.hpp"
#include "lnprob/random.hpp"

#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

namespace lnprob {

/// Static: balances fixed for the session, failed channels stay failed.
/// Dynamic: every non-source hop is resampled from its prior on each attempt.
enum class SimulationMode
{
  static_balances,
  dynamic_balances
};

std::string to_string(SimulationMode mode);

/// Random path among the shortest remaining ones.
struct BaselineStrategy
{};

/// Highest path success probability under the current beliefs first.
struct MaxLikelihoodStrategy
{
  std::size_t candidate_count{1000};
};

using Strategy = std::variant<BaselineStrategy, MaxLikelihoodStrategy>;

std::string to_string(Strategy const &strategy);

struct PaymentTask
{
  NodeIndex sender{};
  NodeIndex receiver{};
  Sat       amount{};
  int       parts{1};
};

struct AttemptRecord
{
  int                        part_index{0};
  Path                       path;
  double                     theoretic_success_prob{0.0};
  std::optional<std::size_t> failed_hop;  ///< empty on success
  double                     info_gain_delta{0.0};

  bool succeeded() const noexcept
  {
    return !failed_hop.has_value();
  }
};

struct SessionResult
{
  PaymentTask                task;
  bool                       delivered{false};
  std::vector<AttemptRecord> attempts;
  int                        total_attempts{0};
  double                     session_info_gain{0.0};
  /// Dynamic mode: beliefs restart from the prior on every attempt and the
  /// session gain is the sum of per-attempt gains.
  bool per_attempt_gain{false};
};

struct SessionOptions
{
  SimulationMode mode{SimulationMode::static_balances};
  Strategy       strategy{BaselineStrategy{}};
  int            max_attempts{200};
  /// Candidate paths enumerated per part when none are supplied.
  std::size_t candidate_limit{1000};
};

using ExclusionSet = std::unordered_set<ChannelIndex>;

/// Index of a uniformly chosen path among the shortest candidates that avoid
/// `excluded`. Throws Exhausted if there is none.
std::size_t next_path_baseline(std::span<Path const> candidates, ExclusionSet const &excluded, RandomStream &rng);

/// Index of the candidate with the highest success probability under
/// `beliefs`; ties go to the shorter path, then to the smaller channel-id
/// sequence. Zero-probability and excluded paths are skipped. Throws
/// Exhausted if nothing is left.
std::size_t next_path_max_likelihood(std::span<Path const> candidates, BeliefState const &beliefs, Sat a,
                                     ExclusionSet const &excluded);

/**
 * Simulates one payment until all parts are delivered, the candidates run
 * out, or max_attempts is reached.
 *
 * Parts are sent one after another. In static mode a delivered part moves its
 * amount along its path for the rest of the session; the graph itself is
 * never modified. Throws NoCandidatePaths when no candidate survives the
 * sender's own first-hop balance check before any attempt is made.
 */
SessionResult run_payment(ChannelGraph const &g, PaymentTask const &task, SessionOptions const &options,
                          RandomStream &rng);

/// Same, over a fixed candidate set.
SessionResult run_payment(ChannelGraph const &g, PaymentTask const &task, std::span<Path const> candidates,
                          SessionOptions const &options, RandomStream &rng);

/// Copy of `g` where every channel without a balance gets one drawn from its
/// prior.
ChannelGraph materialize_balances(ChannelGraph const &g, std::uint64_t seed);

}  // namespace lnprob
