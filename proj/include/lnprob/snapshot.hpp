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

#include <cstdint>

namespace lnprob {

/// Parameters of the synthetic active-kernel-like network.
struct SnapshotOptions
{
  std::size_t   nodes{137};
  std::size_t   channels{882};
  double        median_capacity{6'000'000.0};  ///< satoshi
  double        capacity_sigma{1.0};           ///< of log capacity
  Sat           min_capacity{20'000};
  Sat           max_capacity{200'000'000};
  bool          with_balances{true};  ///< uniform on [0, c]
  std::uint64_t seed{1};
};

/**
 * Connected random graph: a preferential-attachment spanning tree plus extra
 * channels between distinct, not yet connected pairs, with log-normal
 * capacities. Priors are uniform.
 */
ChannelGraph generate_snapshot(SnapshotOptions const &opts);

/// Same topology with every capacity set to `capacity`, no balances and
/// uniform priors.
ChannelGraph with_constant_capacity(ChannelGraph const &g, Sat capacity);

/**
 * Line s -> h1 -> ... -> r whose first channel is fully funded by s and whose
 * `uncertain_hops` remaining channels have no balance. Every channel has
 * capacity `capacity` and a uniform prior.
 */
ChannelGraph line_graph(int uncertain_hops, Sat capacity);

}  // namespace lnprob
