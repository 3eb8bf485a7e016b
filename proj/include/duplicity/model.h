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

#ifndef DUPLICITY_MODEL_H_
#define DUPLICITY_MODEL_H_

// Core duplicity-game types: the basic game, the three belief tables, the
// incentive modulator and the signal generator, together with the Bayesian
// update and best-response machinery every other module builds on.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace duplicity {

// Probability comparisons and utility ties use this absolute tolerance.
inline constexpr double kTolerance = 1e-9;
// Belief tables must be normalized to this tolerance.
inline constexpr double kNormalizationTolerance = 1e-12;

// Index 0 of every action list is the drop-out action.
inline constexpr std::size_t kDropOut = 0;

using Distribution = std::vector<double>;

// Dense (state, type, action) table.
class UtilityTable {
 public:
  UtilityTable() = default;
  UtilityTable(std::size_t states, std::size_t types, std::size_t actions,
               double fill = 0.0);

  double operator()(std::size_t x, std::size_t t, std::size_t a) const {
    return values_[(x * types_ + t) * actions_ + a];
  }
  double& operator()(std::size_t x, std::size_t t, std::size_t a) {
    return values_[(x * types_ + t) * actions_ + a];
  }

  std::size_t num_states() const { return states_; }
  std::size_t num_types() const { return types_; }
  std::size_t num_actions() const { return actions_; }
  std::span<const double> values() const { return values_; }

  friend bool operator==(const UtilityTable&, const UtilityTable&) = default;

 private:
  std::size_t states_ = 0;
  std::size_t types_ = 0;
  std::size_t actions_ = 0;
  std::vector<double> values_;
};

class BasicGame {
 public:
  // Throws Error(kInvalidArgument) when sizes disagree, K < 2, or an entry
  // is not finite.
  BasicGame(std::vector<std::string> states, std::vector<std::string> types,
            std::vector<std::string> actions, UtilityTable utility_defender,
            UtilityTable utility_user);

  std::size_t num_states() const { return states_.size(); }
  std::size_t num_types() const { return types_.size(); }
  std::size_t num_actions() const { return actions_.size(); }

  const std::vector<std::string>& states() const { return states_; }
  const std::vector<std::string>& types() const { return types_; }
  const std::vector<std::string>& actions() const { return actions_; }

  const UtilityTable& utility_defender() const { return utility_defender_; }
  const UtilityTable& utility_user() const { return utility_user_; }

  friend bool operator==(const BasicGame&, const BasicGame&) = default;

 private:
  std::vector<std::string> states_;
  std::vector<std::string> types_;
  std::vector<std::string> actions_;
  UtilityTable utility_defender_;
  UtilityTable utility_user_;
};

// b: the state distribution the defender designs (true distribution).
// user: b_U(.|theta), one distribution over states per type.
// defender: b_D(.|x), one distribution over types per state.
struct BeliefProfile {
  Distribution b;
  std::vector<Distribution> user;
  std::vector<Distribution> defender;

  // Validates shapes against the game and normalization of every row.
  void Validate(const BasicGame& game) const;

  bool IsOvert(double tol = kTolerance) const;

  // Common prior shared by the defender and every user type.
  static BeliefProfile Overt(Distribution prior,
                             std::vector<Distribution> type_beliefs);
  static BeliefProfile Covert(Distribution truth, Distribution reported,
                              std::vector<Distribution> type_beliefs);

  friend bool operator==(const BeliefProfile&,
                         const BeliefProfile&) = default;
};

// Type-belief table b_D(theta|x) that does not depend on the state.
std::vector<Distribution> StateIndependentTypes(std::size_t num_states,
                                                const Distribution& types);

// Per-action utility transfer c and defender scaling gamma. The drop-out
// transfer is pinned to zero.
class Modulator {
 public:
  // Throws Error(kInvalidArgument) if c[0] != 0, gamma < 0, c has fewer
  // than two entries, or a value is not finite.
  Modulator(std::vector<double> transfer, double gamma);

  static Modulator Zero(std::size_t num_actions);

  double transfer(std::size_t a) const { return transfer_[a]; }
  const std::vector<double>& transfers() const { return transfer_; }
  double gamma() const { return gamma_; }
  bool IsZero() const;

  friend bool operator==(const Modulator&, const Modulator&) = default;

 private:
  std::vector<double> transfer_;
  double gamma_ = 0.0;
};

// Row-stochastic pi(s|x) over an indexed signal space.
class Generator {
 public:
  // rows[x][s]; throws Error(kInvalidArgument) on negative entries, ragged
  // rows, or rows not summing to one within 1e-9.
  explicit Generator(std::vector<std::vector<double>> rows);

  // Every state emits `signal` with probability one.
  static Generator ZeroInformation(std::size_t num_states,
                                   std::size_t num_signals,
                                   std::size_t signal);
  // State x emits signals[x]; the signals must be pairwise distinct.
  static Generator FullInformation(std::size_t num_signals,
                                   const std::vector<std::size_t>& signals);

  std::size_t num_states() const { return rows_.size(); }
  std::size_t num_signals() const { return rows_.front().size(); }
  double prob(std::size_t x, std::size_t s) const { return rows_[x][s]; }
  const std::vector<std::vector<double>>& rows() const { return rows_; }

 private:
  std::vector<std::vector<double>> rows_;
};

struct ModulatedUtilities {
  UtilityTable defender;  // v_D + gamma * c
  UtilityTable user;      // v_U - c
};

ModulatedUtilities Modulate(const BasicGame& game, const Modulator& mod);

// Posterior over states after observing `signal`; throws
// Error(kZeroProbabilitySignal) when the signal is impossible under `prior`.
Distribution BayesUpdate(std::span<const double> prior, const Generator& gen,
                         std::size_t signal);

// Game with modulated utilities and the defender's type beliefs bound in.
// Best responses, prior utilities and generator evaluations all go through
// this so the modulated tables are built once.
class ModulatedGame {
 public:
  ModulatedGame(const BasicGame& game, const Modulator& mod,
                std::vector<Distribution> type_beliefs);

  std::size_t num_states() const { return num_states_; }
  std::size_t num_types() const { return num_types_; }
  std::size_t num_actions() const { return num_actions_; }
  const ModulatedUtilities& utilities() const { return utilities_; }
  const std::vector<Distribution>& type_beliefs() const {
    return type_beliefs_;
  }

  // sum_x belief(x) vhat_U(x, type, a)
  double UserValue(std::span<const double> belief, std::size_t type,
                   std::size_t a) const;
  // sum_x belief(x) b_D(type|x) vhat_D(x, type, a)
  double DefenderValue(std::span<const double> belief, std::size_t type,
                       std::size_t a) const;

  // argmax_a UserValue; actions within kTolerance of the maximum are tied
  // and resolved toward the largest DefenderValue, then the lowest index.
  std::size_t BestResponse(std::span<const double> belief,
                           std::size_t type) const;

  // Defender's expected utility when every type best-responds to `belief`
  // and the state is distributed as `belief` (overt prior utility).
  double DefenderUtilityAt(std::span<const double> belief) const;

 private:
  std::size_t num_states_;
  std::size_t num_types_;
  std::size_t num_actions_;
  ModulatedUtilities utilities_;
  std::vector<Distribution> type_beliefs_;
};

// Index of the best response for one type (see ModulatedGame::BestResponse).
std::size_t BestResponse(const BasicGame& game, const Modulator& mod,
                         const std::vector<Distribution>& type_beliefs,
                         std::span<const double> posterior, std::size_t type);

// E_{x~b} E_{theta~b_D(.|x)} vhat_D(x, theta, a*_theta(b_U(.|theta))).
double PriorUtility(const BasicGame& game, const BeliefProfile& beliefs,
                    const Modulator& mod);

// Signal at which some user type had no posterior (the signal has zero
// probability under b_U(.|type)) and fell back to his prior best response.
struct OffSupportSignal {
  std::size_t signal;
  std::size_t type;
};

struct GeneratorEvaluation {
  double defender_value = 0.0;
  std::vector<double> user_values;  // per type, E_x E_s vhat_U(x,t,a*)
  std::vector<double> user_transfers;  // per type, E_x E_s c(a*)
  std::vector<OffSupportSignal> prior_responses;
};

// Full evaluation of a generator under (possibly covert) beliefs. Throws
// Error(kInconsistentSupport) when a signal that occurs under b has zero
// probability under every b_U(.|theta).
GeneratorEvaluation EvaluateGenerator(const BasicGame& game,
                                      const BeliefProfile& beliefs,
                                      const Modulator& mod,
                                      const Generator& gen);

double ExpectedPosteriorUtility(const BasicGame& game,
                                const BeliefProfile& beliefs,
                                const Modulator& mod, const Generator& gen);

struct ExpectedPosterior {
  Distribution belief;
  bool plausible = false;  // belief == b_U(.|type) within 1e-9
};

// Expected posterior belief of one user type when signals are drawn from
// the defender's distribution b.
ExpectedPosterior ExpectedPosteriorBelief(const BeliefProfile& beliefs,
                                          const Generator& gen,
                                          std::size_t type);

}  // namespace duplicity

#endif  // DUPLICITY_MODEL_H_
