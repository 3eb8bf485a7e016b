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

#include "duplicity/model.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "duplicity/error.h"

namespace duplicity {
namespace {

void CheckDistribution(std::span<const double> d, std::size_t expected_size,
                       const std::string& what) {
  if (d.size() != expected_size) {
    throw Error(ErrorKind::kInvalidArgument,
                what + " has " + std::to_string(d.size()) +
                    " entries, expected " + std::to_string(expected_size));
  }
  double sum = 0.0;
  for (double p : d) {
    if (!std::isfinite(p) || p < 0.0) {
      throw Error(ErrorKind::kInvalidArgument,
                  what + " has a negative or non-finite entry");
    }
    sum += p;
  }
  if (std::fabs(sum - 1.0) > kNormalizationTolerance) {
    throw Error(ErrorKind::kInvalidArgument,
                what + " is not normalized (sums to " + std::to_string(sum) +
                    ")");
  }
}

}  // namespace

UtilityTable::UtilityTable(std::size_t states, std::size_t types,
                           std::size_t actions, double fill)
    : states_(states),
      types_(types),
      actions_(actions),
      values_(states * types * actions, fill) {}

BasicGame::BasicGame(std::vector<std::string> states,
                     std::vector<std::string> types,
                     std::vector<std::string> actions,
                     UtilityTable utility_defender, UtilityTable utility_user)
    : states_(std::move(states)),
      types_(std::move(types)),
      actions_(std::move(actions)),
      utility_defender_(std::move(utility_defender)),
      utility_user_(std::move(utility_user)) {
  if (states_.empty() || types_.empty()) {
    throw Error(ErrorKind::kInvalidArgument,
                "a game needs at least one state and one type");
  }
  if (actions_.size() < 2) {
    throw Error(ErrorKind::kInvalidArgument,
                "a game needs the drop-out action plus at least one other");
  }
  for (const UtilityTable* table : {&utility_defender_, &utility_user_}) {
    if (table->num_states() != states_.size() ||
        table->num_types() != types_.size() ||
        table->num_actions() != actions_.size()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "utility table shape does not match (states, types, "
                  "actions)");
    }
    for (double v : table->values()) {
      if (!std::isfinite(v)) {
        throw Error(ErrorKind::kInvalidArgument,
                    "utility tables must be finite");
      }
    }
  }
}

void BeliefProfile::Validate(const BasicGame& game) const {
  const std::size_t n = game.num_states();
  const std::size_t m = game.num_types();
  CheckDistribution(b, n, "b");
  if (user.size() != m) {
    throw Error(ErrorKind::kInvalidArgument,
                "b_U needs one distribution per type");
  }
  for (std::size_t t = 0; t < m; ++t) {
    CheckDistribution(user[t], n, "b_U(.|" + game.types()[t] + ")");
  }
  if (defender.size() != n) {
    throw Error(ErrorKind::kInvalidArgument,
                "b_D needs one distribution per state");
  }
  for (std::size_t x = 0; x < n; ++x) {
    CheckDistribution(defender[x], m, "b_D(.|" + game.states()[x] + ")");
  }
}

bool BeliefProfile::IsOvert(double tol) const {
  for (const Distribution& row : user) {
    for (std::size_t x = 0; x < b.size(); ++x) {
      if (std::fabs(row[x] - b[x]) > tol) return false;
    }
  }
  return true;
}

BeliefProfile BeliefProfile::Overt(Distribution prior,
                                   std::vector<Distribution> type_beliefs) {
  const std::size_t m = type_beliefs.empty() ? 0 : type_beliefs[0].size();
  BeliefProfile profile;
  profile.user.assign(m, prior);
  profile.b = std::move(prior);
  profile.defender = std::move(type_beliefs);
  return profile;
}

BeliefProfile BeliefProfile::Covert(Distribution truth, Distribution reported,
                                    std::vector<Distribution> type_beliefs) {
  const std::size_t m = type_beliefs.empty() ? 0 : type_beliefs[0].size();
  BeliefProfile profile;
  profile.b = std::move(truth);
  profile.user.assign(m, std::move(reported));
  profile.defender = std::move(type_beliefs);
  return profile;
}

std::vector<Distribution> StateIndependentTypes(std::size_t num_states,
                                                const Distribution& types) {
  return std::vector<Distribution>(num_states, types);
}

Modulator::Modulator(std::vector<double> transfer, double gamma)
    : transfer_(std::move(transfer)), gamma_(gamma) {
  if (transfer_.size() < 2) {
    throw Error(ErrorKind::kInvalidArgument,
                "modulator needs one transfer per action");
  }
  if (transfer_[kDropOut] != 0.0) {
    throw Error(ErrorKind::kInvalidArgument,
                "modulation feasibility (MF) requires c(a_DO) = 0");
  }
  if (!std::isfinite(gamma_) || gamma_ < 0.0) {
    throw Error(ErrorKind::kInvalidArgument, "gamma must be finite and >= 0");
  }
  for (double c : transfer_) {
    if (!std::isfinite(c)) {
      throw Error(ErrorKind::kInvalidArgument, "transfers must be finite");
    }
  }
}

Modulator Modulator::Zero(std::size_t num_actions) {
  return Modulator(std::vector<double>(num_actions, 0.0), 0.0);
}

bool Modulator::IsZero() const {
  return std::all_of(transfer_.begin(), transfer_.end(),
                     [](double c) { return c == 0.0; });
}

Generator::Generator(std::vector<std::vector<double>> rows)
    : rows_(std::move(rows)) {
  if (rows_.empty() || rows_.front().empty()) {
    throw Error(ErrorKind::kInvalidArgument, "generator has no entries");
  }
  const std::size_t width = rows_.front().size();
  for (const auto& row : rows_) {
    if (row.size() != width) {
      throw Error(ErrorKind::kInvalidArgument, "generator rows are ragged");
    }
    double sum = 0.0;
    for (double p : row) {
      if (!std::isfinite(p) || p < 0.0) {
        throw Error(ErrorKind::kInvalidArgument,
                    "generator probabilities must be nonnegative");
      }
      sum += p;
    }
    if (std::fabs(sum - 1.0) > kTolerance) {
      throw Error(ErrorKind::kInvalidArgument,
                  "generator row does not sum to one");
    }
  }
}

Generator Generator::ZeroInformation(std::size_t num_states,
                                     std::size_t num_signals,
                                     std::size_t signal) {
  std::vector<std::vector<double>> rows(num_states,
                                        std::vector<double>(num_signals));
  for (auto& row : rows) row.at(signal) = 1.0;
  return Generator(std::move(rows));
}

Generator Generator::FullInformation(std::size_t num_signals,
                                     const std::vector<std::size_t>& signals) {
  std::vector<std::size_t> sorted = signals;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::kInvalidArgument,
                "full-information generator needs distinct signals");
  }
  std::vector<std::vector<double>> rows(signals.size(),
                                        std::vector<double>(num_signals));
  for (std::size_t x = 0; x < signals.size(); ++x) rows[x].at(signals[x]) = 1;
  return Generator(std::move(rows));
}

ModulatedUtilities Modulate(const BasicGame& game, const Modulator& mod) {
  if (mod.transfers().size() != game.num_actions()) {
    throw Error(ErrorKind::kInvalidArgument,
                "modulator and game disagree on the action count");
  }
  ModulatedUtilities out{game.utility_defender(), game.utility_user()};
  for (std::size_t x = 0; x < game.num_states(); ++x) {
    for (std::size_t t = 0; t < game.num_types(); ++t) {
      for (std::size_t a = 0; a < game.num_actions(); ++a) {
        out.defender(x, t, a) += mod.gamma() * mod.transfer(a);
        out.user(x, t, a) -= mod.transfer(a);
      }
    }
  }
  return out;
}

Distribution BayesUpdate(std::span<const double> prior, const Generator& gen,
                         std::size_t signal) {
  Distribution posterior(prior.size());
  double total = 0.0;
  for (std::size_t x = 0; x < prior.size(); ++x) {
    posterior[x] = prior[x] * gen.prob(x, signal);
    total += posterior[x];
  }
  if (total <= 0.0) {
    throw Error(ErrorKind::kZeroProbabilitySignal,
                "signal " + std::to_string(signal) +
                    " has zero probability under the belief");
  }
  for (double& p : posterior) p /= total;
  return posterior;
}

ModulatedGame::ModulatedGame(const BasicGame& game, const Modulator& mod,
                             std::vector<Distribution> type_beliefs)
    : num_states_(game.num_states()),
      num_types_(game.num_types()),
      num_actions_(game.num_actions()),
      utilities_(Modulate(game, mod)),
      type_beliefs_(std::move(type_beliefs)) {
  if (type_beliefs_.size() != num_states_) {
    throw Error(ErrorKind::kInvalidArgument,
                "b_D needs one distribution per state");
  }
  for (const auto& row : type_beliefs_) {
    CheckDistribution(row, num_types_, "b_D");
  }
}

double ModulatedGame::UserValue(std::span<const double> belief,
                                std::size_t type, std::size_t a) const {
  double v = 0.0;
  for (std::size_t x = 0; x < num_states_; ++x) {
    v += belief[x] * utilities_.user(x, type, a);
  }
  return v;
}

double ModulatedGame::DefenderValue(std::span<const double> belief,
                                    std::size_t type, std::size_t a) const {
  double v = 0.0;
  for (std::size_t x = 0; x < num_states_; ++x) {
    v += belief[x] * type_beliefs_[x][type] * utilities_.defender(x, type, a);
  }
  return v;
}

std::size_t ModulatedGame::BestResponse(std::span<const double> belief,
                                        std::size_t type) const {
  double best_user = UserValue(belief, type, 0);
  for (std::size_t a = 1; a < num_actions_; ++a) {
    best_user = std::max(best_user, UserValue(belief, type, a));
  }
  std::size_t best = num_actions_;
  double best_defender = 0.0;
  for (std::size_t a = 0; a < num_actions_; ++a) {
    if (UserValue(belief, type, a) < best_user - kTolerance) continue;
    const double d = DefenderValue(belief, type, a);
    if (best == num_actions_ || d > best_defender) {
      best = a;
      best_defender = d;
    }
  }
  return best;
}

double ModulatedGame::DefenderUtilityAt(std::span<const double> belief) const {
  double v = 0.0;
  for (std::size_t t = 0; t < num_types_; ++t) {
    v += DefenderValue(belief, t, BestResponse(belief, t));
  }
  return v;
}

std::size_t BestResponse(const BasicGame& game, const Modulator& mod,
                         const std::vector<Distribution>& type_beliefs,
                         std::span<const double> posterior, std::size_t type) {
  return ModulatedGame(game, mod, type_beliefs).BestResponse(posterior, type);
}

double PriorUtility(const BasicGame& game, const BeliefProfile& beliefs,
                    const Modulator& mod) {
  beliefs.Validate(game);
  const ModulatedGame mg(game, mod, beliefs.defender);
  double v = 0.0;
  for (std::size_t t = 0; t < game.num_types(); ++t) {
    v += mg.DefenderValue(beliefs.b, t, mg.BestResponse(beliefs.user[t], t));
  }
  return v;
}

GeneratorEvaluation EvaluateGenerator(const BasicGame& game,
                                      const BeliefProfile& beliefs,
                                      const Modulator& mod,
                                      const Generator& gen) {
  beliefs.Validate(game);
  if (gen.num_states() != game.num_states()) {
    throw Error(ErrorKind::kInvalidArgument,
                "generator and game disagree on the state count");
  }
  const ModulatedGame mg(game, mod, beliefs.defender);
  const std::size_t n = game.num_states();
  const std::size_t m = game.num_types();

  GeneratorEvaluation eval;
  eval.user_values.assign(m, 0.0);
  eval.user_transfers.assign(m, 0.0);
  Distribution joint(n);
  for (std::size_t s = 0; s < gen.num_signals(); ++s) {
    // joint(x) = b(x) pi(s|x); the defender's and users' payoffs at this
    // signal are linear in it.
    double signal_mass = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
      joint[x] = beliefs.b[x] * gen.prob(x, s);
      signal_mass += joint[x];
    }
    if (signal_mass <= 0.0) continue;

    bool any_posterior = false;
    for (std::size_t t = 0; t < m; ++t) {
      double user_mass = 0.0;
      for (std::size_t x = 0; x < n; ++x) {
        user_mass += beliefs.user[t][x] * gen.prob(x, s);
      }
      std::size_t action;
      if (user_mass > 0.0) {
        any_posterior = true;
        action = mg.BestResponse(BayesUpdate(beliefs.user[t], gen, s), t);
      } else {
        eval.prior_responses.push_back({s, t});
        action = mg.BestResponse(beliefs.user[t], t);
      }
      eval.defender_value += mg.DefenderValue(joint, t, action);
      eval.user_values[t] += mg.UserValue(joint, t, action);
      eval.user_transfers[t] += signal_mass * mod.transfer(action);
    }
    if (!any_posterior) {
      throw Error(ErrorKind::kInconsistentSupport,
                  "signal " + std::to_string(s) +
                      " occurs under b but is impossible for every user type");
    }
  }
  return eval;
}

double ExpectedPosteriorUtility(const BasicGame& game,
                                const BeliefProfile& beliefs,
                                const Modulator& mod, const Generator& gen) {
  return EvaluateGenerator(game, beliefs, mod, gen).defender_value;
}

ExpectedPosterior ExpectedPosteriorBelief(const BeliefProfile& beliefs,
                                          const Generator& gen,
                                          std::size_t type) {
  const Distribution& user = beliefs.user.at(type);
  const std::size_t n = beliefs.b.size();
  ExpectedPosterior out;
  out.belief.assign(n, 0.0);
  for (std::size_t s = 0; s < gen.num_signals(); ++s) {
    double signal_mass = 0.0;
    double user_mass = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
      signal_mass += beliefs.b[x] * gen.prob(x, s);
      user_mass += user[x] * gen.prob(x, s);
    }
    if (signal_mass <= 0.0) continue;
    if (user_mass <= 0.0) {
      throw Error(ErrorKind::kInconsistentSupport,
                  "signal " + std::to_string(s) +
                      " occurs under b but not under b_U of type " +
                      std::to_string(type));
    }
    for (std::size_t x = 0; x < n; ++x) {
      out.belief[x] += signal_mass * user[x] * gen.prob(x, s) / user_mass;
    }
  }
  out.plausible = true;
  for (std::size_t x = 0; x < n; ++x) {
    if (std::fabs(out.belief[x] - user[x]) > kTolerance) out.plausible = false;
  }
  return out;
}

}  // namespace duplicity
