#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nkgame/model.hpp"

namespace nkgame {

struct TrialOutcome {
  bool decided = false;
  std::optional<std::uint64_t> decision_time;  // steps (async) or rounds (sync)
  bool frozen = false;
  std::optional<std::uint64_t> freeze_time;
  bool truncated = false;
  int final_ones = 0;
};

struct Estimate {
  std::uint64_t n_trials = 0;
  std::uint64_t n_decided = 0;
  std::uint64_t n_frozen = 0;
  std::uint64_t n_truncated = 0;
  double p_decision_hat = 0.0;
  double ci99_lo = 0.0;
  double ci99_hi = 0.0;
  std::optional<double> mean_decision_time;  // conditional on deciding
  double truncation_rate = 0.0;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Wilson score interval at 99% confidence.
Interval wilson99(std::uint64_t successes, std::uint64_t trials);

/// One independent trial. The RNG stream is derived from
/// (config.master_seed, trial_index); trials never share state. The trial
/// stops at the first decision, at a frozen state (when freezing is defined
/// for the population), or after max_steps (truncated).
TrialOutcome run_trial(const GameConfig& config, std::uint64_t trial_index);

/// Trials 0..n_trials-1, optionally on several worker threads. The result
/// vector is indexed by trial, so aggregation order never depends on
/// scheduling. workers == 0 means hardware concurrency.
std::vector<TrialOutcome> run_trials(const GameConfig& config, std::uint64_t n_trials,
                                     unsigned workers = 1);

/// Aggregates in trial-index order (bit-reproducible for any worker count).
Estimate aggregate(const std::vector<TrialOutcome>& outcomes);

Estimate estimate(const GameConfig& config, std::uint64_t n_trials, unsigned workers = 1);

}  // namespace nkgame
