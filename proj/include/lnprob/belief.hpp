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

#include "lnprob/distribution.hpp"
#include "lnprob/graph.hpp"

#include <map>
#include <optional>
#include <vector>

namespace lnprob {

/**
 * A sender's knowledge about channel balances during one payment session.
 *
 * Beliefs are kept per channel over X, the balance node_a held when the
 * session started; both directions of a channel read the same belief. A hop
 * in direction b->a succeeds iff c - X >= a, i.e. X < c - a + 1.
 *
 * Amounts already delivered by earlier parts of the same session shift the
 * live balance away from X. They are tracked as a net transfer D (moved from
 * node_a to node_b), so the live forward balance is X - D and every event is
 * translated back onto X before conditioning.
 *
 * Channels of the session's source with a ground-truth balance start out
 * known (degenerate).
 */
class BeliefState
{
public:
  BeliefState() = default;
  explicit BeliefState(ChannelGraph const &g);
  BeliefState(ChannelGraph const &g, NodeIndex source);

  ChannelGraph const &graph() const
  {
    return *graph_;
  }
  std::optional<NodeIndex> source() const noexcept
  {
    return source_;
  }

  BalanceDistribution const &posterior(ChannelIndex c) const;
  BalanceDistribution const &prior(ChannelIndex c) const;

  /// Net amount moved from node_a to node_b earlier in the session.
  Sat transferred(ChannelIndex c) const;

  /// P(live sendable balance in the hop's direction >= a).
  double hop_success_prob(Hop hop, Sat a) const;

  /// Conditions the channel on the hop's outcome at amount a.
  /// Throws ImpossibleEvent if the outcome contradicts the current belief.
  void observe_hop(Hop hop, Sat a, bool success);

  /// Records a delivered amount along a hop.
  void record_transfer(Hop hop, Sat amount);

  /// Marks a channel's balance as known for the whole session.
  void know(ChannelIndex c, Sat balance);

  /// Drops all observations and transfers; priors are kept.
  void reset();

  struct Entry
  {
    BalanceDistribution prior;
    BalanceDistribution posterior;
    Sat                 transferred{0};
  };

  /// Channels touched so far, ordered by channel index.
  std::map<ChannelIndex, Entry> const &entries() const noexcept
  {
    return entries_;
  }

private:
  Entry &entry(ChannelIndex c);

  ChannelGraph const           *graph_{nullptr};
  std::optional<NodeIndex>      source_;
  std::map<ChannelIndex, Entry> entries_;
  std::vector<ChannelIndex>     known_;
};

}  // namespace lnprob
