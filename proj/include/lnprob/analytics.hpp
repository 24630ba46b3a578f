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

#include <optional>
#include <vector>

namespace lnprob {

/// Equal split of an amount into parts that sum to it exactly; the first
/// (amount mod parts) parts carry one extra satoshi.
struct SplitPlan
{
  int              parts{1};
  std::vector<Sat> part_amounts;
  /// Objective value k / s(a / k) at the chosen k, when computed.
  double expected_attempts{0.0};

  Sat total() const;
};

SplitPlan split_equal(Sat amount, int parts);

/// B(s; n, i) = C(n, i) s^i (1 - s)^(n - i).
double binomial_pmf(double s, int n, int i);

/// Probability that the k-th success happens exactly at trial n.
double negative_bernoulli_pmf(double s, int k, int n);

/// E[n] = k / s.
double expected_attempts(double s, int k);

/// Smallest n with 1 - (1 - s)^n > sigma.
int attempts_for_slo_single(double s, double sigma);

/// Smallest n in [k, n_cap] with P(at least k successes in n trials) > sigma,
/// or nullopt when no such n exists.
std::optional<int> attempts_for_slo_mpp(double s, int k, double sigma, int n_cap);

/// ((c + 1 - a) / (c + 1))^l; a may be fractional.
double uniform_path_success(double a, Sat c, int l);

/// Amount at which k1 / s(a / k1) and k2 / s(a / k2) intersect for constant
/// capacity c and l uncertain hops.
double break_even_amount(Sat c, int l, int k1, int k2);

/// k in [1, k_max] minimizing k / s(a / k) with every part <= c; ties go to
/// the smaller k.
SplitPlan optimal_split_uniform(Sat a, Sat c, int l, int k_max);

/// Path success when a fraction p of the l hops is bimodal and the rest
/// uniform: (1/2)^(p l) ((c - a + 1) / (c + 1))^((1 - p) l).
double mixed_model_success(double a, Sat c, int l, double p);

}  // namespace lnprob
