#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nkgame/model.hpp"
#include "nkgame/rational.hpp"

namespace nkgame {

/// Behavioral class sizes. Bernoulli(0) counts as a rejector and
/// Bernoulli(1) as a consentor; only Bernoulli(1/2) (neutralists) are
/// otherwise admitted into exact analysis.
struct LumpedCounts {
  int n = 0;
  int rejectors = 0;
  int consentors = 0;
  int random_followers = 0;
  int majority_followers = 0;
  int minority_followers = 0;
  int neutralists = 0;
};

/// Throws std::domain_error if the population has a Bernoulli agent with
/// p outside {0, 1/2, 1}.
LumpedCounts lumped_counts(const Population& population);

/// Per-class counts of opinion-1 agents. Same-role agents are exchangeable
/// on the complete graph, so the transition law depends on the full state
/// only through these counts.
struct LumpedState {
  int random_ones = 0;
  int majority_ones = 0;
  int minority_ones = 0;
  int neutral_ones = 0;

  bool operator==(const LumpedState&) const = default;
};

/// Total number of agents holding 1 in a lumped state.
int lumped_ones(const LumpedCounts& counts, const LumpedState& state);

/// One-step law of the asynchronous dynamics from a lumped state, as exact
/// (probability, target) pairs including the aggregated stay probability.
/// No decision halting is applied here.
std::vector<std::pair<Rational, LumpedState>> async_transitions(const LumpedCounts& counts,
                                                                const LumpedState& state);

enum class StateClass { Transient, AbsorbingDecision, AbsorbingNoDecision };

struct Transition {
  std::int32_t target = 0;
  Rational prob;
};

class StateSpaceTooLarge : public std::runtime_error {
 public:
  StateSpaceTooLarge(std::size_t required, std::size_t cap)
      : std::runtime_error("state space too large: " + std::to_string(required) +
                           " lumped states exceed cap " + std::to_string(cap)),
        required_(required),
        cap_(cap) {}
  std::size_t required() const { return required_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t required_, cap_;
};

/// Reduced asynchronous chain. States with Z >= k are collapsed into one
/// absorbing decision super-state (the dynamics halt on decision), indexed
/// states.size(); all enumerated states have Z < k.
struct ChainAnalysis {
  LumpedCounts counts;
  int k = 1;
  std::vector<LumpedState> states;
  std::vector<std::vector<Transition>> rows;  // one row per enumerated state
  std::vector<StateClass> classification;     // size states.size() + 1
  std::vector<double> p_decision;             // per state, incl. super-state
  std::vector<double> expected_steps;         // +inf where absorption has probability < 1
  double residual = 0.0;                      // max residual of the two linear solves

  int decision_state() const { return static_cast<int>(states.size()); }
  int state_count() const { return static_cast<int>(states.size()) + 1; }
};

/// Builds and solves the reduced chain. Asynchronous mode only; the
/// population may contain rejectors, consentors, followers and neutralists.
/// Throws StateSpaceTooLarge when the lumped state count exceeds the cap,
/// std::invalid_argument for synchronous mode, std::domain_error for
/// inadmissible Bernoulli probabilities.
ChainAnalysis build_chain(const GameConfig& config, std::size_t state_cap = 1'000'000);

/// Initial law with followers and neutralists i.i.d. Bernoulli(1/2):
/// a product of per-class binomials, with all Z >= k mass on the decision
/// super-state. Indexed like ChainAnalysis::states (+ super-state).
std::vector<double> default_initial_distribution(const ChainAnalysis& chain);
std::vector<Rational> default_initial_distribution_exact(const ChainAnalysis& chain);

struct AbsorptionResult {
  double p_decision = 0.0;
  double expected_steps = 0.0;  // +inf when absorption is not almost sure
  double residual = 0.0;
};

/// Decision-hitting probability and expected absorption time under the
/// given initial distribution (must sum to 1).
AbsorptionResult absorption(const ChainAnalysis& chain, std::span<const double> initial);

/// Exact-hitting probabilities per state, by rational elimination. Intended
/// for small chains (oracle-grade ground truth).
std::vector<Rational> exact_hitting_probabilities(const ChainAnalysis& chain);

/// Exact decision probability under the default Bernoulli(1/2) initial law.
Rational exact_decision_probability(const ChainAnalysis& chain);

/// Exact one-step E[Z' - Z | state] of the raw asynchronous dynamics (no
/// decision halting).
Rational expected_ones_drift(const LumpedCounts& counts, const LumpedState& state);

/// Exact one-step E[W' - W | state] with W = 2*Z*(n-Z).
Rational expected_disagreement_drift(const LumpedCounts& counts, const LumpedState& state);

/// P(sum of independent Bernoulli(p_i) >= threshold) by dynamic-programming
/// convolution; exact up to floating error.
double poisson_binomial_tail(std::span<const double> probabilities, int threshold);

/// Per-round decision law of the synchronous game with Bernoulli-type
/// agents only: rounds are i.i.d., so the decision time is geometric with
/// success probability p (the exact Poisson-binomial tail at k - n_c).
struct SyncDecisionLaw {
  double p = 0.0;
  double expected_T = 0.0;       // mean of the geometric decision time, (1-p)/p
  double expected_rounds = 0.0;  // E[T] + 1 = 1/p
  bool decided_at_start = false; // k <= n_c: decision at t = 0
  bool impossible = false;       // k > n - n_r: no decision in finite time
};
SyncDecisionLaw synchronous_decision_law(const GameConfig& config);

/// Standard normal CDF (via erfc).
double normal_cdf(double z);

/// Normal approximation of the per-round success probability:
/// 1 - Phi((k_eff - n_eff*p) / sqrt(n_eff*p*(1-p))). Throws
/// std::domain_error for degenerate variance (p in {0,1}).
double normal_round_probability(double n_eff, double p_agent, double k_eff);

/// Round-count bracket from the extreme Bernoulli parameters among the
/// non-rejectors: p_max/p_min through the normal approximation, and the
/// corresponding [1/p_max, 1/p_min] bracket on the mean rounds to decide.
struct NormalRoundBounds {
  double p_max = 0.0;
  double p_min = 0.0;
  double rounds_lower = 0.0;
  double rounds_upper = 0.0;
};
NormalRoundBounds normal_round_bounds(const GameConfig& config);

/// True iff every absorbing no-decision state leaves all majority
/// followers at opinion 0. Requires a rejector/consentor/majority-follower
/// population with at least two majority followers.
bool majority_zero_at_no_decision(const ChainAnalysis& chain);

}  // namespace nkgame
