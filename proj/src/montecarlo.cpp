#include "nkgame/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "nkgame/dynamics.hpp"

namespace nkgame {

namespace {
// Phi^-1(0.995), the 99% Wilson score z.
constexpr double kZ99 = 2.5758293035489004;
}  // namespace

Interval wilson99(std::uint64_t successes, std::uint64_t trials) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = kZ99 * kZ99;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2.0 * n)) / denom;
  const double half = (kZ99 / denom) * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
  double lo = center - half;
  double hi = center + half;
  if (lo < 0.0) lo = 0.0;
  if (hi > 1.0) hi = 1.0;
  return {lo, hi};
}

TrialOutcome run_trial(const GameConfig& config, std::uint64_t trial_index) {
  Rng rng(trial_stream_seed(config.master_seed, trial_index));
  const Population& pop = config.population;
  OpinionState state = initial_state(pop, rng);
  const bool can_freeze = freezing_defined(pop);

  TrialOutcome out;
  if (is_decision(state, config.k)) {
    out.decided = true;
    out.decision_time = 0;
  } else if (can_freeze && is_frozen(state, pop)) {
    out.frozen = true;
    out.freeze_time = 0;
  } else {
    for (std::uint64_t step = 0; step < config.max_steps; ++step) {
      bool changed;
      if (config.mode == Mode::Asynchronous)
        changed = step_async_inplace(state, pop, rng).changed;
      else
        changed = step_sync_inplace(state, pop, rng);
      if (is_decision(state, config.k)) {
        out.decided = true;
        out.decision_time = state.t;
        break;
      }
      // an unchanged state was already known not to be frozen
      if (changed && can_freeze && is_frozen(state, pop)) {
        out.frozen = true;
        out.freeze_time = state.t;
        break;
      }
    }
    out.truncated = !out.decided && !out.frozen;
  }
  out.final_ones = ones_count(state);
  return out;
}

std::vector<TrialOutcome> run_trials(const GameConfig& config, std::uint64_t n_trials,
                                     unsigned workers) {
  config.validate();
  std::vector<TrialOutcome> outcomes(n_trials);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  if (workers <= 1 || n_trials < 2) {
    for (std::uint64_t i = 0; i < n_trials; ++i) outcomes[i] = run_trial(config, i);
    return outcomes;
  }
  std::atomic<std::uint64_t> next{0};
  constexpr std::uint64_t kChunk = 64;
  auto worker = [&] {
    while (true) {
      const std::uint64_t begin = next.fetch_add(kChunk);
      if (begin >= n_trials) break;
      const std::uint64_t end = std::min(begin + kChunk, n_trials);
      for (std::uint64_t i = begin; i < end; ++i) outcomes[i] = run_trial(config, i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return outcomes;
}

Estimate aggregate(const std::vector<TrialOutcome>& outcomes) {
  Estimate est;
  est.n_trials = outcomes.size();
  double time_sum = 0.0;
  for (const TrialOutcome& o : outcomes) {  // trial-index order
    if (o.decided) {
      ++est.n_decided;
      time_sum += static_cast<double>(*o.decision_time);
    }
    if (o.frozen) ++est.n_frozen;
    if (o.truncated) ++est.n_truncated;
  }
  if (est.n_trials > 0) {
    est.p_decision_hat = static_cast<double>(est.n_decided) / static_cast<double>(est.n_trials);
    est.truncation_rate = static_cast<double>(est.n_truncated) / static_cast<double>(est.n_trials);
  }
  const Interval ci = wilson99(est.n_decided, est.n_trials);
  est.ci99_lo = ci.lo;
  est.ci99_hi = ci.hi;
  if (est.n_decided > 0) est.mean_decision_time = time_sum / static_cast<double>(est.n_decided);
  return est;
}

Estimate estimate(const GameConfig& config, std::uint64_t n_trials, unsigned workers) {
  return aggregate(run_trials(config, n_trials, workers));
}

}  // namespace nkgame
