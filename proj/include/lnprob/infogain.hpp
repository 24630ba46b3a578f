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
#include "lnprob/distribution.hpp"
#include "lnprob/graph.hpp"

#include <optional>

namespace lnprob {

/// KL(posterior || prior) in nats. Throws SupportViolation if the posterior
/// puts mass where the prior has none.
double kl_divergence(BalanceDistribution const &posterior, BalanceDistribution const &prior);

/// Applies one attempt's outcome: hops before `failing_hop` succeeded, the
/// failing hop failed, later hops are untouched. No failing hop means every
/// hop succeeded.
BeliefState observe_attempt(BeliefState beliefs, Path const &path, Sat a, std::optional<std::size_t> failing_hop);

/// In-place variant of observe_attempt.
void observe(BeliefState &beliefs, Path const &path, Sat a, std::optional<std::size_t> failing_hop);

/// Sum over channels of KL(current posterior || session-start prior); a
/// channel seen in several attempts counts once.
double session_information_gain(BeliefState const &beliefs);

}  // namespace lnprob
