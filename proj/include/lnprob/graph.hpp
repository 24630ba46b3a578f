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

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace lnprob {

class BeliefState;

using NodeIndex    = std::size_t;
using ChannelIndex = std::size_t;

/// Which endpoint sends. A channel's stored balance belongs to node_a.
enum class Direction : std::uint8_t
{
  a_to_b,
  b_to_a
};

constexpr Direction reversed(Direction d) noexcept
{
  return d == Direction::a_to_b ? Direction::b_to_a : Direction::a_to_b;
}

struct Channel
{
  std::string         id;
  NodeIndex           node_a{};
  NodeIndex           node_b{};
  Sat                 capacity{};
  std::optional<Sat>  balance;  ///< ground truth held by node_a
  BalanceDistribution prior;

  NodeIndex sender(Direction d) const noexcept
  {
    return d == Direction::a_to_b ? node_a : node_b;
  }
  NodeIndex receiver(Direction d) const noexcept
  {
    return d == Direction::a_to_b ? node_b : node_a;
  }
};

/// Sendable amount in direction `d` when node_a holds `balance_a`.
constexpr Sat sendable(Sat capacity, Sat balance_a, Direction d) noexcept
{
  return d == Direction::a_to_b ? balance_a : capacity - balance_a;
}

struct Hop
{
  ChannelIndex channel{};
  Direction    direction{Direction::a_to_b};

  friend bool operator==(Hop, Hop) = default;
};

struct Path
{
  NodeIndex        source{};
  std::vector<Hop> hops;

  std::size_t length() const noexcept
  {
    return hops.size();
  }

  friend bool operator==(Path const &, Path const &) = default;
};

/// Immutable after construction; safe for concurrent reads.
class ChannelGraph
{
public:
  /// Throws ValidationError on duplicate or empty ids.
  NodeIndex add_node(std::string id);

  /// Throws ValidationError when an invariant is violated.
  ChannelIndex add_channel(Channel channel);

  std::size_t node_count() const noexcept
  {
    return nodes_.size();
  }
  std::size_t channel_count() const noexcept
  {
    return channels_.size();
  }

  std::string const &node_id(NodeIndex n) const
  {
    return nodes_.at(n);
  }
  Channel const &channel(ChannelIndex c) const
  {
    return channels_.at(c);
  }
  Channel &channel(ChannelIndex c)
  {
    return channels_.at(c);
  }
  std::vector<Channel> const &channels() const noexcept
  {
    return channels_;
  }

  std::optional<NodeIndex>    find_node(std::string const &id) const;
  std::optional<ChannelIndex> find_channel(std::string const &id) const;
  NodeIndex                   node(std::string const &id) const;

  /// Incident channels, ordered by channel id.
  std::vector<ChannelIndex> const &incident(NodeIndex n) const
  {
    return adjacency_.at(n);
  }

  /// Channel ids along a path.
  std::vector<std::string> channel_ids(Path const &p) const;

  /// Throws InvalidArgs when `p` is not a contiguous, channel-simple path.
  void validate(Path const &p) const;

private:
  std::vector<std::string>                      nodes_;
  std::vector<Channel>                          channels_;
  std::vector<std::vector<ChannelIndex>>        adjacency_;
  std::unordered_map<std::string, NodeIndex>    node_index_;
  std::unordered_map<std::string, ChannelIndex> channel_index_;
};

/// Serializable description of a prior, resolved against a capacity.
struct DistributionSpec
{
  DistributionKind kind{DistributionKind::uniform};
  double           low_side_prob{0.5};
  double           mean_frac{0.5};
  double           stddev_frac{0.1};
  double           p_bimodal{0.3};
  Sat              balance{0};

  BalanceDistribution make(Sat capacity) const;
};

/// First matching pattern wins. Patterns are shell globs over channel ids.
struct PriorRule
{
  std::string      pattern;
  DistributionSpec spec;
};

struct GraphLoadOptions
{
  DistributionSpec       default_prior;
  std::vector<PriorRule> rules;
  /// Channels carrying a balance get a known (degenerate) prior.
  bool trust_balances{false};
};

/// Prior for a channel under the given options.
BalanceDistribution resolve_prior(GraphLoadOptions const &opts, std::string const &channel_id, Sat capacity,
                                  std::optional<Sat> balance);

/// Parses the graph JSON document. Throws ParseError or ValidationError.
ChannelGraph parse_graph(std::string const &text, GraphLoadOptions const &opts = {});
ChannelGraph load_graph(std::filesystem::path const &file, GraphLoadOptions const &opts = {});

/// Graph JSON with nodes and channels; priors are not serialized.
std::string dump_graph(ChannelGraph const &g);
void        save_graph(ChannelGraph const &g, std::filesystem::path const &file);

/// Lexicographic order on channel-id sequences.
bool path_id_less(ChannelGraph const &g, Path const &l, Path const &r);

/**
 * Up to k node-simple paths from src to dst over channels with capacity >= a,
 * ordered by hop count and then by the channel-id sequence.
 *
 * Throws NoPath when dst is unreachable, InvalidArgs when src == dst or k == 0.
 */
std::vector<Path> k_shortest_paths(ChannelGraph const &g, NodeIndex src, NodeIndex dst, std::size_t k, Sat a);

/// Product of per-hop directional success probabilities under `beliefs`.
double path_success_prob(ChannelGraph const &g, Path const &p, Sat a, BeliefState const &beliefs);

/// Same, under the channels' priors and the source's known balances.
double path_success_prob(ChannelGraph const &g, Path const &p, Sat a);

/// Hops whose sending-side balance the source does not know.
std::size_t uncertain_hop_count(ChannelGraph const &g, Path const &p);
std::size_t uncertain_hop_count(ChannelGraph const &g, Path const &p, BeliefState const &beliefs);

}  // namespace lnprob
