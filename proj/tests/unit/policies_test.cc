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

#include "doctest.h"
#include "duplicity/error.h"
#include "duplicity/insider.h"
#include "duplicity/lp.h"
#include "duplicity/policies.h"
#include "support/random_games.h"

namespace duplicity {
namespace {

insider::InsiderInstance Benchmark(double p) {
  insider::InsiderParams params;
  params.p_honeypot_true = params.p_honeypot_reported = p;
  return insider::InsiderGame(params);
}

TEST_CASE("policy enumeration is mixed radix, first type most significant") {
  const auto two = EnumeratePolicies(2, 2);
  REQUIRE(two.size() == 4);
  CHECK(two[0].actions == std::vector<std::size_t>{0, 0});
  CHECK(two[1].actions == std::vector<std::size_t>{0, 1});
  CHECK(two[2].actions == std::vector<std::size_t>{1, 0});
  CHECK(two[3].actions == std::vector<std::size_t>{1, 1});
  CHECK(EnumeratePolicies(1, 3).size() == 3);
  const auto eight = EnumeratePolicies(3, 2);
  REQUIRE(eight.size() == 8);
  CHECK(eight[5].actions == std::vector<std::size_t>{1, 0, 1});
  for (std::size_t i = 0; i < eight.size(); ++i) {
    CHECK(PolicyIndex(eight[i], 2) == i);
    CHECK(PolicyAt(i, 3, 2) == eight[i]);
  }
  try {
    PolicyCount(30, 3);
    FAIL("expected SpaceTooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kSpaceTooLarge);
  }
}

TEST_CASE("incentive compatibility") {
  const auto inst = Benchmark(0.6);
  const ModulatedGame mg(inst.game, inst.modulator, inst.beliefs.defender);
  const std::size_t prior_policy = BestResponsePolicy(mg, inst.beliefs.user);
  CHECK(prior_policy == 2);  // selfish AC, adversarial DO
  const auto zero = Generator::ZeroInformation(2, 4, prior_policy);
  CHECK(CheckIncentiveCompatibility(zero, inst.game, inst.beliefs,
                                    inst.modulator)
            .empty());

  // {AC, AC} sent only from the honeypot: the adversarial type would see a
  // certain honeypot and deviate.
  const Generator bad({{0.0, 0.0, 0.5, 0.5}, {0.0, 0.0, 1.0, 0.0}});
  const auto violations =
      CheckIncentiveCompatibility(bad, inst.game, inst.beliefs, inst.modulator);
  REQUIRE_FALSE(violations.empty());
  bool adversarial = false;
  for (const auto& v : violations) {
    CHECK(v.slack < 0.0);
    adversarial |= v.policy == 3 && v.type == insider::kAdversarial;
  }
  CHECK(adversarial);

  // Dominant actions never violate.
  UtilityTable dom(2, 2, 2, 0.0);
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t t = 0; t < 2; ++t) dom(x, t, 1) = 1.0;
  BasicGame g({"x0", "x1"}, {"t0", "t1"}, {"DO", "a1"}, dom, dom);
  const auto beliefs =
      BeliefProfile::Overt({0.4, 0.6}, {{0.5, 0.5}, {0.5, 0.5}});
  const Generator any({{0.0, 0.0, 0.0, 1.0}, {0.0, 0.0, 0.0, 1.0}});
  CHECK(CheckIncentiveCompatibility(any, g, beliefs, Modulator::Zero(2))
            .empty());
}

TEST_CASE("enforceable policies") {
  CHECK(EnforceablePolicies(Generator::ZeroInformation(2, 4, 1)) ==
        std::vector<std::size_t>{1});
  const Generator uniform({{0.25, 0.25, 0.25, 0.25}, {0.25, 0.25, 0.25, 0.25}});
  CHECK(EnforceablePolicies(uniform).size() == 4);
  const auto inst = Benchmark(0.6);
  const auto report = OptimalGenerator(inst.game, inst.beliefs, inst.modulator);
  REQUIRE(report.generator);
  CHECK(EnforceablePolicies(*report.generator).size() == 2);
}

TEST_CASE("aggregation preserves the defender value") {
  testing::GameFactory f(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto game = f.Game(3, 2, 2);
    const auto beliefs =
        BeliefProfile::Overt(f.Simplex(3), f.TypeBeliefs(3, 2));
    const auto mod = Modulator::Zero(2);
    const auto gen = f.RandomGenerator(3, 6);
    const auto agg = AggregateSignals(game, beliefs, mod, gen);
    CHECK(agg.num_signals() == 4);
    CHECK(ExpectedPosteriorUtility(game, beliefs, mod, agg) ==
          doctest::Approx(ExpectedPosteriorUtility(game, beliefs, mod, gen))
              .epsilon(1e-9));
    CHECK(CheckIncentiveCompatibility(agg, game, beliefs, mod).empty());
  }
}

}  // namespace
}  // namespace duplicity
