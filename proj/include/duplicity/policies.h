// Copyright 2026 The Duplicity Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DUPLICITY_POLICIES_H_
#define DUPLICITY_POLICIES_H_

// Security policies: the K^M signal classes that prescribe one action per
// user type. Policy indices use a mixed-radix encoding with the first type
// as the most significant digit, so for two types and actions {DO, AC}
// the order is {DO,DO}, {DO,AC}, {AC,DO}, {AC,AC}.

#include <cstddef>
#include <vector>

#include "duplicity/model.h"

namespace duplicity {

inline constexpr std::size_t kMaxPolicies = 1'000'000;

struct SecurityPolicy {
  std::vector<std::size_t> actions;  // actions[l] is required of type l

  friend bool operator==(const SecurityPolicy&,
                         const SecurityPolicy&) = default;
};

// K^M, or Error(kSpaceTooLarge) past kMaxPolicies.
std::size_t PolicyCount(std::size_t num_types, std::size_t num_actions);

std::vector<SecurityPolicy> EnumeratePolicies(std::size_t num_types,
                                              std::size_t num_actions);

std::size_t PolicyIndex(const SecurityPolicy& policy, std::size_t num_actions);
SecurityPolicy PolicyAt(std::size_t index, std::size_t num_types,
                        std::size_t num_actions);

// Policy prescribing each type its best response to `belief` (used for
// zero-information generators and the feasibility witness of the COP).
std::size_t BestResponsePolicy(const ModulatedGame& game,
                               const std::vector<Distribution>& user_beliefs);

struct IcViolation {
  std::size_t policy;
  std::size_t type;
  std::size_t deviation;
  double slack;  // negative
};

// Every (policy, type, deviation) whose incentive-compatibility sum
//   sum_x [vhat_U(x,l,a^l) - vhat_U(x,l,a^h)] pi(s|x) b_U(x|l)
// falls below -kTolerance.
std::vector<IcViolation> CheckIncentiveCompatibility(
    const Generator& gen, const BasicGame& game, const BeliefProfile& beliefs,
    const Modulator& mod);

// Re-expresses an arbitrary generator over the security-policy space: each
// signal is mapped to the policy of best responses at its posteriors and
// signals mapping to the same policy are merged. Types for which a signal
// is impossible respond to their prior.
Generator AggregateSignals(const BasicGame& game, const BeliefProfile& beliefs,
                           const Modulator& mod, const Generator& gen);

// Policies with max_x pi(s|x) > tol.
std::vector<std::size_t> EnforceablePolicies(const Generator& gen,
                                             double tol = kTolerance);

}  // namespace duplicity

#endif  // DUPLICITY_POLICIES_H_
