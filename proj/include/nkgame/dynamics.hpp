#pragma once

#include <optional>

#include "nkgame/model.hpp"

namespace nkgame {

// Deterministic follower rules over the n-1 neighbors. An exact tie
// (ones_among_others == (n-1)/2) keeps the current opinion, so a flip
// requires a strict majority (resp. minority).
int majority_update(int ones_among_others, int n, int self_opinion);
int minority_update(int ones_among_others, int n, int self_opinion);

/// One agent's next opinion given its role, own opinion, and the number of
/// neighbors holding 1. Follower roles require n >= 2.
int update_opinion(const Role& role, int self_opinion, int ones_among_others, int n, Rng& rng);

struct StepRecord {
  std::optional<int> selected_agent;  // asynchronous mode only
  bool changed = false;
  OpinionState new_state;
};

/// Uniformly selects one agent and updates it from the current state.
StepRecord step_async(const OpinionState& state, const GameConfig& config, Rng& rng);

/// Every agent updates from the time-t snapshot; nobody sees intra-step
/// changes. Draws are consumed in agent order.
StepRecord step_sync(const OpinionState& state, const GameConfig& config, Rng& rng);

// In-place kernels used by the Monte Carlo engine.
struct StepEffect {
  int selected_agent = -1;
  bool changed = false;
};
StepEffect step_async_inplace(OpinionState& state, const Population& population, Rng& rng);
bool step_sync_inplace(OpinionState& state, const Population& population, Rng& rng);

/// True iff at least k agents hold opinion 1 (t = 0 counts).
bool is_decision(const OpinionState& state, int k);

/// Freezing is well defined only without Bernoulli(p), 0 < p < 1, agents
/// (those redraw forever; note this includes neutralists).
bool freezing_defined(const Population& population);

/// True iff no agent can change under any selection: every possible next
/// opinion equals the current one. Throws std::domain_error when freezing
/// is undefined for the population.
bool is_frozen(const OpinionState& state, const Population& population);

}  // namespace nkgame
