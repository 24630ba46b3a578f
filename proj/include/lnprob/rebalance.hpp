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

#include <cstddef>
#include <vector>

namespace lnprob {

struct RebalanceResult
{
  ChannelGraph graph;
  std::size_t  cycles{0};     ///< circular payments applied
  double       objective_before{0.0};
  double       objective_after{0.0};  ///< sum of (b/c - 0.5)^2
};

/**
 * Greedy circular rebalancing.
 *
 * Each step takes the most one-sided directed hop that still leads into an
 * improving cycle of at most five hops, all sending from a side holding at
 * least half of its channel, and pushes the integer amount that minimizes the
 * squared distance of the cycle's ratios from 0.5. Stops when the best step
 * improves the objective by less than `tolerance` or after `max_iterations`
 * steps. Capacities and every node's total balance are preserved exactly.
 *
 * Throws ValidationError when a channel has no balance.
 */
RebalanceResult rebalance(ChannelGraph const &g, double tolerance, std::size_t max_iterations);

ChannelGraph rebalance_graph(ChannelGraph const &g, double tolerance, std::size_t max_iterations);

/// b/c per channel. Throws ValidationError when a balance is missing.
std::vector<double> balance_ratios(ChannelGraph const &g);

/// Population variance of balance_ratios.
double ratio_variance(ChannelGraph const &g);

/// Counts of b/c over `bins` equal bins of [0, 1]; b = c lands in the last.
std::vector<std::size_t> ratio_histogram(ChannelGraph const &g, std::size_t bins = 20);

/// Sum of each node's own balances over its channels.
std::vector<Sat> node_balances(ChannelGraph const &g);

}  // namespace lnprob
