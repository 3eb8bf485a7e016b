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

#include <cmath>

#include "doctest.h"
#include "duplicity/error.h"
#include "duplicity/insider.h"
#include "duplicity/model.h"
#include "duplicity/policies.h"
#include "support/oracles.h"
#include "support/random_games.h"

namespace duplicity {
namespace {

using insider::InsiderGame;
using insider::InsiderParams;

insider::InsiderInstance Benchmark(double p) {
  InsiderParams params;
  params.p_honeypot_true = p;
  params.p_honeypot_reported = p;
  return InsiderGame(params);
}

ErrorKind KindOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::kIoError;
}

TEST_CASE("model objects reject invalid input") {
  CHECK(KindOf([] { Modulator({0.1, 0.0}, 0.0); }) ==
        ErrorKind::kInvalidArgument);
  CHECK(KindOf([] { Modulator({0.0, 0.0}, -1.0); }) ==
        ErrorKind::kInvalidArgument);
  CHECK(KindOf([] { Generator({{0.5, 0.4}}); }) ==
        ErrorKind::kInvalidArgument);
  CHECK(KindOf([] { Generator({{1.0, 0.0}, {1.0}}); }) ==
        ErrorKind::kInvalidArgument);
  CHECK(KindOf([] {
          BasicGame({"x"}, {"t"}, {"DO"}, UtilityTable(1, 1, 1),
                    UtilityTable(1, 1, 1));
        }) == ErrorKind::kInvalidArgument);
  const auto inst = Benchmark(0.5);
  BeliefProfile bad = inst.beliefs;
  bad.b = {0.5, 0.49};
  CHECK(KindOf([&] { bad.Validate(inst.game); }) ==
        ErrorKind::kInvalidArgument);
  try {
    Modulator({0.1, 0.0}, 0.0);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("MF") != std::string::npos);
  }
}

TEST_CASE("modulation shifts user utilities and scales defender transfers") {
  const auto inst = Benchmark(0.5);
  const auto zero = Modulate(inst.game, Modulator::Zero(2));
  CHECK(zero.defender == inst.game.utility_defender());
  CHECK(zero.user == inst.game.utility_user());

  const auto half = Modulate(inst.game, Modulator({0.0, 0.5}, 0.0));
  CHECK(half.defender == inst.game.utility_defender());
  CHECK(half.user(insider::kNormal, insider::kSelfish, 1) ==
        doctest::Approx(0.5).epsilon(1e-15));

  UtilityTable zeros(1, 1, 2);
  BasicGame one({"x"}, {"t"}, {"DO", "a1"}, zeros, zeros);
  const auto scaled = Modulate(one, Modulator({0.0, 2.0}, 1.0));
  CHECK(scaled.defender(0, 0, 1) == 2.0);
}

TEST_CASE("Bayes update") {
  const Generator gen({{0.8, 0.2}, {0.4, 0.6}});
  const auto post = BayesUpdate(std::vector<double>{0.5, 0.5}, gen, 0);
  CHECK(post[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(post[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  const auto zero = Generator::ZeroInformation(2, 3, 1);
  const auto same = BayesUpdate(std::vector<double>{0.3, 0.7}, zero, 1);
  CHECK(same[0] == doctest::Approx(0.3));
  const auto full = Generator::FullInformation(2, {1, 0});
  const auto unit = BayesUpdate(std::vector<double>{0.3, 0.7}, full, 0);
  CHECK(unit[0] == 0.0);
  CHECK(unit[1] == 1.0);
  CHECK(KindOf([&] { BayesUpdate(std::vector<double>{1.0, 0.0}, full, 0); }) ==
        ErrorKind::kZeroProbabilitySignal);
}

TEST_CASE("best responses follow the thresholds and the tie-break") {
  const auto inst = Benchmark(0.5);
  const ModulatedGame mg(inst.game, inst.modulator, inst.beliefs.defender);
  const std::vector<double> half = {0.5, 0.5};
  CHECK(mg.BestResponse(half, insider::kSelfish) == 1);
  CHECK(mg.BestResponse(half, insider::kAdversarial) == 0);

  // Exactly at t^g(0) the selfish type is indifferent; the defender's value
  // of access there is zero as well, so the lower index wins.
  const std::vector<double> at_tg = {10.0 / 13.0, 3.0 / 13.0};
  CHECK(mg.BestResponse(at_tg, insider::kSelfish) == 0);

  // Indifferent user, defender prefers action 1.
  UtilityTable vu(1, 1, 2, 0.0), vd(1, 1, 2, 0.0);
  vd(0, 0, 1) = 1.0;
  BasicGame tie({"x"}, {"t"}, {"DO", "a1"}, vd, vu);
  CHECK(BestResponse(tie, Modulator::Zero(2), {{1.0}},
                     std::vector<double>{1.0}, 0) == 1);

  // Dominant action is chosen at every posterior.
  UtilityTable dom(2, 1, 2, 0.0);
  dom(0, 0, 1) = 1.0;
  dom(1, 0, 1) = 0.5;
  BasicGame g({"x0", "x1"}, {"t"}, {"DO", "a1"}, dom, dom);
  for (double p : {0.0, 0.3, 1.0}) {
    CHECK(BestResponse(g, Modulator::Zero(2), {{1.0}, {1.0}},
                       std::vector<double>{p, 1 - p}, 0) == 1);
  }
}

TEST_CASE("prior utility on the insider benchmark") {
  auto at = [](double p) {
    const auto inst = Benchmark(p);
    return PriorUtility(inst.game, inst.beliefs, inst.modulator);
  };
  CHECK(at(0.3) == doctest::Approx(-0.0292).epsilon(1e-12));
  CHECK(at(0.6) == doctest::Approx(0.0704).epsilon(1e-12));
  // Reported share above t^g(0): nobody accesses, whatever the truth.
  InsiderParams params;
  for (double truth : {0.0, 0.4, 1.0}) {
    params.p_honeypot_true = truth;
    params.p_honeypot_reported = 0.8;
    const auto inst = InsiderGame(params);
    CHECK(PriorUtility(inst.game, inst.beliefs, inst.modulator) == 0.0);
  }
}

TEST_CASE("expected posterior utility") {
  const auto inst = Benchmark(0.5);
  const auto zero = Generator::ZeroInformation(2, 4, 2);
  CHECK(ExpectedPosteriorUtility(inst.game, inst.beliefs, inst.modulator,
                                 zero) ==
        doctest::Approx(PriorUtility(inst.game, inst.beliefs,
                                     inst.modulator)));

  InsiderParams selfish;
  selfish.q_selfish = 1.0;
  selfish.q_adversarial = 0.0;
  selfish.p_honeypot_true = selfish.p_honeypot_reported = 0.9;
  const auto s = InsiderGame(selfish);
  const auto full = Generator::FullInformation(2, {0, 1});
  CHECK(ExpectedPosteriorUtility(s.game, s.beliefs, s.modulator, full) ==
        doctest::Approx(0.1).epsilon(1e-12));

  // Identical rows concentrated on one signal reduce to the prior utility.
  testing::GameFactory f(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto game = f.Game(3, 2, 3);
    const auto beliefs =
        BeliefProfile::Overt(f.Simplex(3), f.TypeBeliefs(3, 2));
    const auto mod = f.Transfer(3, 0.5);
    const auto gen = Generator::ZeroInformation(3, 5, trial % 5);
    CHECK(ExpectedPosteriorUtility(game, beliefs, mod, gen) ==
          doctest::Approx(PriorUtility(game, beliefs, mod)).epsilon(1e-12));
  }
}

TEST_CASE("generator evaluation matches the enumeration oracle") {
  testing::GameFactory f(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = f.Index(2, 3), m = f.Index(1, 3), k = f.Index(2, 3);
    const auto game = f.Game(n, m, k);
    BeliefProfile beliefs;
    beliefs.b = f.Simplex(n);
    for (std::size_t t = 0; t < m; ++t) beliefs.user.push_back(f.Simplex(n));
    beliefs.defender = f.TypeBeliefs(n, m);
    const auto mod = f.Transfer(k, f.Uniform(0.0, 1.0));
    const auto gen = f.RandomGenerator(n, f.Index(1, 5));
    const double want = testing::OracleGeneratorValue(game, mod, beliefs, gen);
    CHECK(ExpectedPosteriorUtility(game, beliefs, mod, gen) ==
          doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("off-support signals fall back to the prior response") {
  InsiderParams params;
  const auto inst = InsiderGame(params);
  BeliefProfile beliefs = inst.beliefs;
  // Selfish users rule out honeypots; adversarial users do not.
  beliefs.user[insider::kSelfish] = {0.0, 1.0};
  // Signal 3 is sent only from the honeypot.
  const Generator gen({{0.0, 0.0, 0.0, 1.0}, {1.0, 0.0, 0.0, 0.0}});
  const auto eval = EvaluateGenerator(inst.game, beliefs, inst.modulator, gen);
  REQUIRE(eval.prior_responses.size() == 1);
  CHECK(eval.prior_responses[0].signal == 3);
  CHECK(eval.prior_responses[0].type == insider::kSelfish);
  CHECK(eval.defender_value ==
        doctest::Approx(testing::OracleGeneratorValue(inst.game, inst.modulator,
                                                      beliefs, gen)));

  // A signal no user type can explain is inconsistent.
  beliefs.user[insider::kAdversarial] = {0.0, 1.0};
  CHECK(KindOf([&] {
          EvaluateGenerator(inst.game, beliefs, inst.modulator, gen);
        }) == ErrorKind::kInconsistentSupport);
}

TEST_CASE("expected posterior belief and plausibility") {
  const std::vector<Distribution> types = {{1.0}, {1.0}};
  auto same = BeliefProfile::Overt({0.3, 0.7}, types);
  const auto gen = Generator({{0.2, 0.8}, {0.6, 0.4}});
  CHECK(ExpectedPosteriorBelief(same, gen, 0).plausible);

  auto covert = BeliefProfile::Covert({1.0, 0.0}, {0.5, 0.5}, types);
  const auto full = Generator::FullInformation(2, {0, 1});
  const auto e = ExpectedPosteriorBelief(covert, full, 0);
  CHECK(e.belief[0] == doctest::Approx(1.0));
  CHECK(e.belief[1] == doctest::Approx(0.0));
  CHECK_FALSE(e.plausible);

  const auto zero = Generator::ZeroInformation(2, 2, 0);
  CHECK(ExpectedPosteriorBelief(covert, zero, 0).plausible);
}

}  // namespace
}  // namespace duplicity
