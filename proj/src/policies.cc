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

#include "duplicity/policies.h"

#include <string>

#include "duplicity/error.h"

namespace duplicity {

std::size_t PolicyCount(std::size_t num_types, std::size_t num_actions) {
  std::size_t count = 1;
  for (std::size_t l = 0; l < num_types; ++l) {
    if (count > kMaxPolicies / num_actions) {
      throw Error(ErrorKind::kSpaceTooLarge,
                  std::to_string(num_actions) + "^" +
                      std::to_string(num_types) + " policies exceed the cap");
    }
    count *= num_actions;
  }
  return count;
}

std::vector<SecurityPolicy> EnumeratePolicies(std::size_t num_types,
                                              std::size_t num_actions) {
  const std::size_t count = PolicyCount(num_types, num_actions);
  std::vector<SecurityPolicy> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    out.push_back(PolicyAt(s, num_types, num_actions));
  }
  return out;
}

std::size_t PolicyIndex(const SecurityPolicy& policy,
                        std::size_t num_actions) {
  std::size_t index = 0;
  for (std::size_t a : policy.actions) index = index * num_actions + a;
  return index;
}

SecurityPolicy PolicyAt(std::size_t index, std::size_t num_types,
                        std::size_t num_actions) {
  SecurityPolicy policy{std::vector<std::size_t>(num_types)};
  for (std::size_t l = num_types; l-- > 0;) {
    policy.actions[l] = index % num_actions;
    index /= num_actions;
  }
  return policy;
}

std::size_t BestResponsePolicy(const ModulatedGame& game,
                               const std::vector<Distribution>& user_beliefs) {
  SecurityPolicy policy{std::vector<std::size_t>(game.num_types())};
  for (std::size_t t = 0; t < game.num_types(); ++t) {
    policy.actions[t] = game.BestResponse(user_beliefs[t], t);
  }
  return PolicyIndex(policy, game.num_actions());
}

std::vector<IcViolation> CheckIncentiveCompatibility(
    const Generator& gen, const BasicGame& game, const BeliefProfile& beliefs,
    const Modulator& mod) {
  beliefs.Validate(game);
  const std::size_t n = game.num_states();
  const std::size_t m = game.num_types();
  const std::size_t k = game.num_actions();
  if (gen.num_states() != n || gen.num_signals() != PolicyCount(m, k)) {
    throw Error(ErrorKind::kInvalidArgument,
                "generator is not indexed by the security-policy space");
  }
  const ModulatedUtilities u = Modulate(game, mod);
  std::vector<IcViolation> violations;
  for (std::size_t s = 0; s < gen.num_signals(); ++s) {
    const SecurityPolicy policy = PolicyAt(s, m, k);
    for (std::size_t l = 0; l < m; ++l) {
      const std::size_t prescribed = policy.actions[l];
      for (std::size_t h = 0; h < k; ++h) {
        if (h == prescribed) continue;
        double slack = 0.0;
        for (std::size_t x = 0; x < n; ++x) {
          slack += (u.user(x, l, prescribed) - u.user(x, l, h)) *
                   gen.prob(x, s) * beliefs.user[l][x];
        }
        if (slack < -kTolerance) violations.push_back({s, l, h, slack});
      }
    }
  }
  return violations;
}

Generator AggregateSignals(const BasicGame& game, const BeliefProfile& beliefs,
                           const Modulator& mod, const Generator& gen) {
  beliefs.Validate(game);
  const std::size_t n = game.num_states();
  const std::size_t m = game.num_types();
  const std::size_t k = game.num_actions();
  const ModulatedGame mg(game, mod, beliefs.defender);
  std::vector<std::vector<double>> rows(
      n, std::vector<double>(PolicyCount(m, k), 0.0));
  for (std::size_t s = 0; s < gen.num_signals(); ++s) {
    SecurityPolicy policy{std::vector<std::size_t>(m)};
    for (std::size_t t = 0; t < m; ++t) {
      double mass = 0.0;
      for (std::size_t x = 0; x < n; ++x) {
        mass += beliefs.user[t][x] * gen.prob(x, s);
      }
      policy.actions[t] =
          mass > 0.0 ? mg.BestResponse(BayesUpdate(beliefs.user[t], gen, s), t)
                     : mg.BestResponse(beliefs.user[t], t);
    }
    const std::size_t index = PolicyIndex(policy, k);
    for (std::size_t x = 0; x < n; ++x) rows[x][index] += gen.prob(x, s);
  }
  return Generator(std::move(rows));
}

std::vector<std::size_t> EnforceablePolicies(const Generator& gen,
                                             double tol) {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < gen.num_signals(); ++s) {
    for (std::size_t x = 0; x < gen.num_states(); ++x) {
      if (gen.prob(x, s) > tol) {
        out.push_back(s);
        break;
      }
    }
  }
  return out;
}

}  // namespace duplicity
