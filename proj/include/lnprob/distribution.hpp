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

#include "lnprob/random.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace lnprob {

/// Amounts, capacities and balances, in satoshi.
using Sat = std::int64_t;

enum class DistributionKind
{
  uniform,
  bimodal,
  normal_truncated,
  mixed,
  degenerate,
  interval_uniform
};

std::string to_string(DistributionKind kind);

namespace shape {

struct Uniform
{
  friend bool operator==(Uniform, Uniform) = default;
};

/// Point masses at b = 0 (weight low_side_prob) and b = c.
struct Bimodal
{
  double low_side_prob{0.5};
  friend bool operator==(Bimodal, Bimodal) = default;
};

/// Gaussian restricted to the integers 0..c and renormalized.
struct Normal
{
  double mean{0.0};
  double stddev{1.0};
  /// Point masses and both cumulative sums, when c is small enough to
  /// tabulate.
  struct Table
  {
    std::vector<double> point;  ///< 0..c
    std::vector<double> below;  ///< below[b] = mass of [0, b)
    std::vector<double> above;  ///< above[b] = mass of [b, c]
  };
  std::shared_ptr<Table const> table;

  friend bool operator==(Normal const &l, Normal const &r)
  {
    return l.mean == r.mean && l.stddev == r.stddev;
  }
};

/// p_bimodal * Bimodal(1/2) + (1 - p_bimodal) * Uniform.
struct Mixed
{
  double p_bimodal{0.0};
  friend bool operator==(Mixed, Mixed) = default;
};

struct Degenerate
{
  Sat balance{0};
  friend bool operator==(Degenerate, Degenerate) = default;
};

}  // namespace shape

using Shape = std::variant<shape::Uniform, shape::Bimodal, shape::Normal, shape::Mixed, shape::Degenerate>;

/**
 * Discrete prior or posterior over a channel's balance X in {0, ..., c}.
 *
 * A distribution is a base shape over the full range [0, c] together with a
 * support window [lo, hi]; masses are the base masses restricted to the window
 * and renormalized. Conditioning on a payment outcome only ever narrows the
 * window, so every posterior reachable from a prior stays in this form and
 * probabilities can be evaluated from base CDF differences in O(1).
 */
class BalanceDistribution
{
public:
  static BalanceDistribution uniform(Sat capacity);
  static BalanceDistribution bimodal(Sat capacity, double low_side_prob = 0.5);
  static BalanceDistribution normal_truncated(Sat capacity, double mean, double stddev);
  static BalanceDistribution mixed(Sat capacity, double p_bimodal);
  static BalanceDistribution degenerate(Sat capacity, Sat balance);
  static BalanceDistribution interval_uniform(Sat capacity, Sat lo, Sat hi);

  DistributionKind kind() const;

  Sat capacity() const noexcept
  {
    return capacity_;
  }
  Sat lo() const noexcept
  {
    return lo_;
  }
  Sat hi() const noexcept
  {
    return hi_;
  }
  Shape const &base() const noexcept
  {
    return shape_;
  }

  /// P(X = b).
  double mass(Sat b) const;

  /// P(X < a). Clamps: a <= 0 gives 0, a > c gives 1.
  double below(Sat a) const;

  /// Dense probability vector over 0..c.
  Eigen::ArrayXd masses() const;

  /// Base (unrestricted) probability of the closed range [from, to].
  double base_mass(Sat from, Sat to) const;

  /// Base probability of the current window.
  double window_mass() const
  {
    return base_mass(lo_, hi_);
  }

  /// Same base narrowed to [lo, hi] intersected with the current window.
  /// Throws ImpossibleEvent when the result carries no mass.
  BalanceDistribution restricted(Sat lo, Sat hi) const;

  bool same_base(BalanceDistribution const &other) const
  {
    return capacity_ == other.capacity_ && shape_ == other.shape_;
  }

  friend bool operator==(BalanceDistribution const &l, BalanceDistribution const &r)
  {
    return l.same_base(r) && l.lo_ == r.lo_ && l.hi_ == r.hi_;
  }

private:
  BalanceDistribution(Sat capacity, Shape shape);

  Sat   capacity_;
  Shape shape_;
  Sat   lo_;
  Sat   hi_;
};

/// P(X < a).
double channel_failure_prob(BalanceDistribution const &dist, Sat a);

/// P(X >= a) = 1 - P(X < a).
double channel_success_prob(BalanceDistribution const &dist, Sat a);

/// Posterior given X < a. Throws ImpossibleEvent if P(X < a) = 0.
BalanceDistribution condition_on_failure(BalanceDistribution const &dist, Sat a);

/// Posterior given X >= a. Throws ImpossibleEvent if P(X >= a) = 0.
BalanceDistribution condition_on_success(BalanceDistribution const &dist, Sat a);

/// Draws a balance distributed per `dist`.
Sat sample_balance(BalanceDistribution const &dist, RandomStream &rng);

/// Shannon entropy in nats.
double entropy(BalanceDistribution const &dist);

}  // namespace lnprob
