#include "nkgame/dynamics.hpp"

#include <cassert>
#include <stdexcept>

namespace nkgame {

int majority_update(int ones_among_others, int n, int self_opinion) {
  const int others = n - 1;
  if (2 * ones_among_others > others) return 1;
  if (2 * ones_among_others < others) return 0;
  return self_opinion;
}

int minority_update(int ones_among_others, int n, int self_opinion) {
  const int others = n - 1;
  if (2 * ones_among_others < others) return 1;
  if (2 * ones_among_others > others) return 0;
  return self_opinion;
}

int update_opinion(const Role& role, int self_opinion, int ones_among_others, int n, Rng& rng) {
  switch (role.tag) {
    case RoleTag::Rejector: return 0;
    case RoleTag::Consentor: return 1;
    case RoleTag::Bernoulli: return rng.bernoulli(role.p);
    default: break;
  }
  if (n < 2) throw std::invalid_argument("a follower agent needs at least one neighbor (n >= 2)");
  assert(ones_among_others >= 0 && ones_among_others <= n - 1);
  switch (role.tag) {
    case RoleTag::RandomFollower:
      // copying a uniform neighbor is Bernoulli(ones/(n-1))
      return rng.bernoulli(static_cast<double>(ones_among_others) / (n - 1));
    case RoleTag::MajorityFollower: return majority_update(ones_among_others, n, self_opinion);
    case RoleTag::MinorityFollower: return minority_update(ones_among_others, n, self_opinion);
    default: return self_opinion;  // unreachable
  }
}

StepEffect step_async_inplace(OpinionState& state, const Population& population, Rng& rng) {
  const int n = state.size();
  const int selected = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(n)));
  const int z = ones_count(state);
  const int before = state.opinions[static_cast<std::size_t>(selected)];
  const int after =
      update_opinion(population.role(selected), before, z - before, n, rng);
#ifndef NDEBUG
  {
    // one-step disagreement recursion: when the selected agent flips,
    // W_t - W_{t+1} = 2 * (disagreeing_others - agreeing_others)
    const std::int64_t w_before = 2LL * z * (n - z);
    const int z_after = z - before + after;
    const std::int64_t w_after = 2LL * z_after * (n - z_after);
    const int disagreeing = before ? (n - z) : z;
    const std::int64_t rhs = (after != before) ? 2LL * (2 * disagreeing - (n - 1)) : 0;
    assert(w_before - w_after == rhs);
  }
#endif
  state.opinions[static_cast<std::size_t>(selected)] = static_cast<std::uint8_t>(after);
  state.t += 1;
  return {selected, after != before};
}

bool step_sync_inplace(OpinionState& state, const Population& population, Rng& rng) {
  const int n = state.size();
  const int z = ones_count(state);
  bool changed = false;
  std::vector<std::uint8_t> next(state.opinions.size());
  for (int i = 0; i < n; ++i) {
    const int self = state.opinions[static_cast<std::size_t>(i)];
    const int after = update_opinion(population.role(i), self, z - self, n, rng);
    next[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(after);
    changed |= (after != self);
  }
  state.opinions = std::move(next);
  state.t += 1;
  return changed;
}

StepRecord step_async(const OpinionState& state, const GameConfig& config, Rng& rng) {
  StepRecord rec;
  rec.new_state = state;
  StepEffect eff = step_async_inplace(rec.new_state, config.population, rng);
  rec.selected_agent = eff.selected_agent;
  rec.changed = eff.changed;
  return rec;
}

StepRecord step_sync(const OpinionState& state, const GameConfig& config, Rng& rng) {
  StepRecord rec;
  rec.new_state = state;
  rec.changed = step_sync_inplace(rec.new_state, config.population, rng);
  return rec;
}

bool is_decision(const OpinionState& state, int k) { return ones_count(state) >= k; }

bool freezing_defined(const Population& population) {
  for (const Role& role : population.roles())
    if (role.tag == RoleTag::Bernoulli && role.p > 0.0 && role.p < 1.0) return false;
  return true;
}

bool is_frozen(const OpinionState& state, const Population& population) {
  if (!freezing_defined(population))
    throw std::domain_error("freezing undefined: population contains Bernoulli(p) agents with 0 < p < 1");
  const int n = state.size();
  const int z = ones_count(state);
  for (int i = 0; i < n; ++i) {
    const Role& role = population.role(i);
    const int self = state.opinions[static_cast<std::size_t>(i)];
    const int ones = z - self;
    switch (role.tag) {
      case RoleTag::Rejector:
        if (self != 0) return false;
        break;
      case RoleTag::Consentor:
        if (self != 1) return false;
        break;
      case RoleTag::Bernoulli:  // p is 0 or 1 here
        if (self != static_cast<int>(role.p)) return false;
        break;
      case RoleTag::RandomFollower:
        // frozen only when every neighbor already agrees
        if (self == 1 ? ones != n - 1 : ones != 0) return false;
        break;
      case RoleTag::MajorityFollower:
        if (majority_update(ones, n, self) != self) return false;
        break;
      case RoleTag::MinorityFollower:
        if (minority_update(ones, n, self) != self) return false;
        break;
    }
  }
  return true;
}

}  // namespace nkgame
