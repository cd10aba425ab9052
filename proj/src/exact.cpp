#include "nkgame/exact.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "nkgame/dynamics.hpp"

namespace nkgame {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Dense Gaussian elimination with partial pivoting. A is m x m row-major.
// Throws on a (numerically) singular system.
std::vector<double> solve_dense(const std::vector<double>& A_in, const std::vector<double>& b_in,
                                int m, double& residual_out) {
  std::vector<double> A = A_in;
  std::vector<double> b = b_in;
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i;
  for (int col = 0; col < m; ++col) {
    int pivot = col;
    double best = std::abs(A[static_cast<std::size_t>(col) * m + col]);
    for (int r = col + 1; r < m; ++r) {
      const double v = std::abs(A[static_cast<std::size_t>(r) * m + col]);
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best == 0.0)
      throw std::runtime_error("singular linear system in absorption solve (size " +
                               std::to_string(m) + ", column " + std::to_string(col) + ")");
    if (pivot != col) {
      for (int j = 0; j < m; ++j)
        std::swap(A[static_cast<std::size_t>(col) * m + j], A[static_cast<std::size_t>(pivot) * m + j]);
      std::swap(b[col], b[pivot]);
    }
    const double d = A[static_cast<std::size_t>(col) * m + col];
    for (int r = col + 1; r < m; ++r) {
      const double f = A[static_cast<std::size_t>(r) * m + col] / d;
      if (f == 0.0) continue;
      A[static_cast<std::size_t>(r) * m + col] = 0.0;
      for (int j = col + 1; j < m; ++j)
        A[static_cast<std::size_t>(r) * m + j] -= f * A[static_cast<std::size_t>(col) * m + j];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(m, 0.0);
  for (int r = m - 1; r >= 0; --r) {
    double acc = b[r];
    for (int j = r + 1; j < m; ++j) acc -= A[static_cast<std::size_t>(r) * m + j] * x[j];
    x[r] = acc / A[static_cast<std::size_t>(r) * m + r];
  }
  double res = 0.0;
  for (int r = 0; r < m; ++r) {
    double acc = -b_in[r];
    for (int j = 0; j < m; ++j) acc += A_in[static_cast<std::size_t>(r) * m + j] * x[j];
    res = std::max(res, std::abs(acc));
  }
  residual_out = res;
  return x;
}

std::vector<Rational> solve_dense_exact(std::vector<Rational> A, std::vector<Rational> b, int m) {
  for (int col = 0; col < m; ++col) {
    int pivot = -1;
    for (int r = col; r < m; ++r) {
      if (A[static_cast<std::size_t>(r) * m + col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw std::runtime_error("singular linear system in exact absorption solve");
    if (pivot != col) {
      for (int j = col; j < m; ++j)
        std::swap(A[static_cast<std::size_t>(col) * m + j], A[static_cast<std::size_t>(pivot) * m + j]);
      std::swap(b[col], b[pivot]);
    }
    const Rational d = A[static_cast<std::size_t>(col) * m + col];
    for (int r = col + 1; r < m; ++r) {
      Rational& lead = A[static_cast<std::size_t>(r) * m + col];
      if (lead == 0) continue;
      const Rational f = lead / d;
      lead = 0;
      for (int j = col + 1; j < m; ++j)
        A[static_cast<std::size_t>(r) * m + j] -= f * A[static_cast<std::size_t>(col) * m + j];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(m);
  for (int r = m - 1; r >= 0; --r) {
    Rational acc = b[r];
    for (int j = r + 1; j < m; ++j) acc -= A[static_cast<std::size_t>(r) * m + j] * x[j];
    x[r] = acc / A[static_cast<std::size_t>(r) * m + r];
  }
  return x;
}

// Visits every lumped state in a fixed nested order (random, majority,
// minority, neutral). Chain enumeration and the initial law both rely on
// this order.
template <typename Fn>
void for_each_box_state(const LumpedCounts& c, Fn&& fn) {
  for (int rf = 0; rf <= c.random_followers; ++rf)
    for (int mf = 0; mf <= c.majority_followers; ++mf)
      for (int mi = 0; mi <= c.minority_followers; ++mi)
        for (int nn = 0; nn <= c.neutralists; ++nn) fn(LumpedState{rf, mf, mi, nn});
}

// Backward reachability over the chain graph (self-loops ignored).
std::vector<char> backward_reachable(const ChainAnalysis& chain, const std::vector<char>& seeds) {
  const int total = chain.state_count();
  std::vector<std::vector<std::int32_t>> rev(total);
  for (std::size_t i = 0; i < chain.rows.size(); ++i)
    for (const Transition& e : chain.rows[i])
      if (e.target != static_cast<std::int32_t>(i)) rev[e.target].push_back(static_cast<std::int32_t>(i));
  std::vector<char> mark = seeds;
  std::deque<std::int32_t> queue;
  for (int i = 0; i < total; ++i)
    if (mark[i]) queue.push_back(i);
  while (!queue.empty()) {
    const std::int32_t u = queue.front();
    queue.pop_front();
    for (std::int32_t p : rev[u])
      if (!mark[p]) {
        mark[p] = 1;
        queue.push_back(p);
      }
  }
  return mark;
}

// States from which the decision super-state is reachable, restricted to
// transient states; used by both the float and the rational hitting solves.
std::vector<std::int32_t> decision_solve_set(const ChainAnalysis& chain) {
  std::vector<char> seeds(chain.state_count(), 0);
  seeds[chain.decision_state()] = 1;
  const std::vector<char> reach = backward_reachable(chain, seeds);
  std::vector<std::int32_t> set;
  for (std::size_t i = 0; i < chain.states.size(); ++i)
    if (reach[i] && chain.classification[i] == StateClass::Transient)
      set.push_back(static_cast<std::int32_t>(i));
  return set;
}

std::vector<std::uint64_t> pascal_row(int m) {
  std::vector<std::uint64_t> row(m + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= m; ++i)
    for (int j = i; j >= 1; --j) row[j] += row[j - 1];
  return row;
}

// C(m, j) / 2^m for j = 0..m.
std::vector<double> half_binomial_pmf(int m) {
  std::vector<double> pmf(m + 1, 0.0);
  if (m <= 62) {
    const auto row = pascal_row(m);
    const double scale = std::ldexp(1.0, -m);
    for (int j = 0; j <= m; ++j) pmf[j] = static_cast<double>(row[j]) * scale;
  } else {
    pmf[0] = std::ldexp(1.0, -m);
    for (int j = 0; j < m; ++j) pmf[j + 1] = pmf[j] * (m - j) / (j + 1);
  }
  return pmf;
}

std::vector<Rational> half_binomial_pmf_exact(int m) {
  using boost::multiprecision::cpp_int;
  std::vector<Rational> pmf(m + 1);
  cpp_int c = 1;
  const cpp_int denom = cpp_int(1) << m;
  for (int j = 0; j <= m; ++j) {
    pmf[j] = Rational(c, denom);
    if (j < m) c = c * (m - j) / (j + 1);
  }
  return pmf;
}

}  // namespace

LumpedCounts lumped_counts(const Population& population) {
  LumpedCounts c;
  c.n = population.size();
  for (const Role& role : population.roles()) {
    if (role.pins_zero()) {
      ++c.rejectors;
    } else if (role.pins_one()) {
      ++c.consentors;
    } else {
      switch (role.tag) {
        case RoleTag::RandomFollower: ++c.random_followers; break;
        case RoleTag::MajorityFollower: ++c.majority_followers; break;
        case RoleTag::MinorityFollower: ++c.minority_followers; break;
        case RoleTag::Bernoulli:
          if (role.p == 0.5)
            ++c.neutralists;
          else
            throw std::domain_error("exact analysis requires Bernoulli probabilities in {0, 1/2, 1}");
          break;
        default: break;
      }
    }
  }
  return c;
}

int lumped_ones(const LumpedCounts& counts, const LumpedState& state) {
  return counts.consentors + state.random_ones + state.majority_ones + state.minority_ones +
         state.neutral_ones;
}

std::vector<std::pair<Rational, LumpedState>> async_transitions(const LumpedCounts& c,
                                                                const LumpedState& s) {
  const int n = c.n;
  const int z = lumped_ones(c, s);
  std::vector<std::pair<Rational, LumpedState>> out;
  Rational stay(c.rejectors + c.consentors, n);

  auto push = [&](Rational p, LumpedState t) {
    if (p == 0) return;
    if (t == s)
      stay += p;
    else
      out.emplace_back(std::move(p), t);
  };

  if (c.random_followers > 0) {
    if (s.random_ones > 0) {
      const Rational sel(s.random_ones, n);
      LumpedState t = s;
      t.random_ones -= 1;
      push(sel * Rational(n - z, n - 1), t);  // copies a 0-neighbor
      stay += sel * Rational(z - 1, n - 1);
    }
    const int zeros = c.random_followers - s.random_ones;
    if (zeros > 0) {
      const Rational sel(zeros, n);
      LumpedState t = s;
      t.random_ones += 1;
      push(sel * Rational(z, n - 1), t);
      stay += sel * Rational(n - 1 - z, n - 1);
    }
  }

  if (c.majority_followers > 0) {
    if (s.majority_ones > 0) {
      if (majority_update(z - 1, n, 1) == 0) {
        LumpedState t = s;
        t.majority_ones -= 1;
        push(Rational(s.majority_ones, n), t);
      } else {
        stay += Rational(s.majority_ones, n);
      }
    }
    const int zeros = c.majority_followers - s.majority_ones;
    if (zeros > 0) {
      if (majority_update(z, n, 0) == 1) {
        LumpedState t = s;
        t.majority_ones += 1;
        push(Rational(zeros, n), t);
      } else {
        stay += Rational(zeros, n);
      }
    }
  }

  if (c.minority_followers > 0) {
    if (s.minority_ones > 0) {
      if (minority_update(z - 1, n, 1) == 0) {
        LumpedState t = s;
        t.minority_ones -= 1;
        push(Rational(s.minority_ones, n), t);
      } else {
        stay += Rational(s.minority_ones, n);
      }
    }
    const int zeros = c.minority_followers - s.minority_ones;
    if (zeros > 0) {
      if (minority_update(z, n, 0) == 1) {
        LumpedState t = s;
        t.minority_ones += 1;
        push(Rational(zeros, n), t);
      } else {
        stay += Rational(zeros, n);
      }
    }
  }

  if (c.neutralists > 0) {
    // a selected neutralist redraws Bernoulli(1/2)
    if (s.neutral_ones > 0) {
      LumpedState t = s;
      t.neutral_ones -= 1;
      push(Rational(s.neutral_ones, 2 * n), t);
      stay += Rational(s.neutral_ones, 2 * n);
    }
    const int zeros = c.neutralists - s.neutral_ones;
    if (zeros > 0) {
      LumpedState t = s;
      t.neutral_ones += 1;
      push(Rational(zeros, 2 * n), t);
      stay += Rational(zeros, 2 * n);
    }
  }

  if (stay != 0) out.emplace_back(stay, s);
  return out;
}

ChainAnalysis build_chain(const GameConfig& config, std::size_t state_cap) {
  config.validate();
  if (config.mode != Mode::Asynchronous)
    throw std::invalid_argument("exact chain analysis supports asynchronous mode only");

  ChainAnalysis chain;
  chain.counts = lumped_counts(config.population);
  chain.k = config.k;
  const LumpedCounts& c = chain.counts;

  const std::size_t volume = static_cast<std::size_t>(c.random_followers + 1) *
                             (c.majority_followers + 1) * (c.minority_followers + 1) *
                             (c.neutralists + 1);
  if (volume > state_cap) throw StateSpaceTooLarge(volume, state_cap);

  // Compact ids for states with Z < k; everything else collapses into the
  // decision super-state.
  const int d_mf = c.majority_followers + 1;
  const int d_mi = c.minority_followers + 1;
  const int d_nn = c.neutralists + 1;
  auto box_index = [&](const LumpedState& s) {
    return ((static_cast<std::size_t>(s.random_ones) * d_mf + s.majority_ones) * d_mi +
            s.minority_ones) *
               d_nn +
           s.neutral_ones;
  };
  std::vector<std::int32_t> compact(volume, -1);
  for_each_box_state(c, [&](const LumpedState& s) {
    if (lumped_ones(c, s) < chain.k) {
      compact[box_index(s)] = static_cast<std::int32_t>(chain.states.size());
      chain.states.push_back(s);
    }
  });

  const int S = static_cast<int>(chain.states.size());
  const std::int32_t DEC = S;

  chain.rows.resize(S);
  for (int i = 0; i < S; ++i) {
    auto& row = chain.rows[i];
    for (auto& [p, t] : async_transitions(c, chain.states[i])) {
      const std::int32_t id = lumped_ones(c, t) >= chain.k ? DEC : compact[box_index(t)];
      auto it = std::find_if(row.begin(), row.end(),
                             [&](const Transition& e) { return e.target == id; });
      if (it == row.end())
        row.push_back({id, p});
      else
        it->prob += p;
    }
  }

  chain.classification.assign(S + 1, StateClass::Transient);
  chain.classification[DEC] = StateClass::AbsorbingDecision;
  for (int i = 0; i < S; ++i)
    if (chain.rows[i].size() == 1 && chain.rows[i][0].target == i)
      chain.classification[i] = StateClass::AbsorbingNoDecision;

  // Hitting probability of the decision super-state. States that cannot
  // reach it get probability 0; the rest form a nonsingular system.
  chain.p_decision.assign(S + 1, 0.0);
  chain.p_decision[DEC] = 1.0;
  double res_h = 0.0;
  {
    const std::vector<std::int32_t> set = decision_solve_set(chain);
    const int m = static_cast<int>(set.size());
    if (m > 0) {
      std::vector<std::int32_t> pos(S + 1, -1);
      for (int r = 0; r < m; ++r) pos[set[r]] = r;
      std::vector<double> A(static_cast<std::size_t>(m) * m, 0.0), b(m, 0.0);
      for (int r = 0; r < m; ++r) {
        A[static_cast<std::size_t>(r) * m + r] = 1.0;
        for (const Transition& e : chain.rows[set[r]]) {
          const double p = to_double(e.prob);
          if (e.target == DEC)
            b[r] += p;
          else if (pos[e.target] >= 0)
            A[static_cast<std::size_t>(r) * m + pos[e.target]] -= p;
          // transitions to states outside the set hit probability 0
        }
      }
      const std::vector<double> h = solve_dense(A, b, m, res_h);
      for (int r = 0; r < m; ++r) chain.p_decision[set[r]] = h[r];
    }
  }

  // Expected absorption time. States that can reach the set of states from
  // which no absorbing state is reachable have infinite expectation.
  chain.expected_steps.assign(S + 1, 0.0);
  double res_tau = 0.0;
  {
    std::vector<char> absorbing(S + 1, 0);
    absorbing[DEC] = 1;
    for (int i = 0; i < S; ++i)
      if (chain.classification[i] == StateClass::AbsorbingNoDecision) absorbing[i] = 1;
    const std::vector<char> reach_abs = backward_reachable(chain, absorbing);
    std::vector<char> never(S + 1, 0);
    bool any_never = false;
    for (int i = 0; i <= S; ++i)
      if (!reach_abs[i]) {
        never[i] = 1;
        any_never = true;
      }
    std::vector<char> tainted(S + 1, 0);
    if (any_never) tainted = backward_reachable(chain, never);

    std::vector<std::int32_t> set;
    for (int i = 0; i < S; ++i) {
      if (absorbing[i]) continue;
      if (tainted[i]) {
        chain.expected_steps[i] = kInf;
        continue;
      }
      set.push_back(i);
    }
    const int m = static_cast<int>(set.size());
    if (m > 0) {
      std::vector<std::int32_t> pos(S + 1, -1);
      for (int r = 0; r < m; ++r) pos[set[r]] = r;
      std::vector<double> A(static_cast<std::size_t>(m) * m, 0.0), b(m, 1.0);
      for (int r = 0; r < m; ++r) {
        A[static_cast<std::size_t>(r) * m + r] = 1.0;
        for (const Transition& e : chain.rows[set[r]]) {
          if (pos[e.target] >= 0)
            A[static_cast<std::size_t>(r) * m + pos[e.target]] -= to_double(e.prob);
        }
      }
      const std::vector<double> tau = solve_dense(A, b, m, res_tau);
      for (int r = 0; r < m; ++r) chain.expected_steps[set[r]] = tau[r];
    }
  }

  chain.residual = std::max(res_h, res_tau);
  return chain;
}

std::vector<double> default_initial_distribution(const ChainAnalysis& chain) {
  const LumpedCounts& c = chain.counts;
  const auto w_rf = half_binomial_pmf(c.random_followers);
  const auto w_mf = half_binomial_pmf(c.majority_followers);
  const auto w_mi = half_binomial_pmf(c.minority_followers);
  const auto w_nn = half_binomial_pmf(c.neutralists);
  std::vector<double> pi(chain.state_count(), 0.0);
  std::size_t next_id = 0;
  for_each_box_state(c, [&](const LumpedState& s) {
    const double w =
        w_rf[s.random_ones] * w_mf[s.majority_ones] * w_mi[s.minority_ones] * w_nn[s.neutral_ones];
    if (lumped_ones(c, s) < chain.k)
      pi[next_id++] += w;
    else
      pi[chain.decision_state()] += w;
  });
  return pi;
}

std::vector<Rational> default_initial_distribution_exact(const ChainAnalysis& chain) {
  const LumpedCounts& c = chain.counts;
  const auto w_rf = half_binomial_pmf_exact(c.random_followers);
  const auto w_mf = half_binomial_pmf_exact(c.majority_followers);
  const auto w_mi = half_binomial_pmf_exact(c.minority_followers);
  const auto w_nn = half_binomial_pmf_exact(c.neutralists);
  std::vector<Rational> pi(chain.state_count());
  std::size_t next_id = 0;
  for_each_box_state(c, [&](const LumpedState& s) {
    const Rational w =
        w_rf[s.random_ones] * w_mf[s.majority_ones] * w_mi[s.minority_ones] * w_nn[s.neutral_ones];
    if (lumped_ones(c, s) < chain.k)
      pi[next_id++] += w;
    else
      pi[chain.decision_state()] += w;
  });
  return pi;
}

AbsorptionResult absorption(const ChainAnalysis& chain, std::span<const double> initial) {
  if (initial.size() != static_cast<std::size_t>(chain.state_count()))
    throw std::invalid_argument("initial distribution size does not match the chain");
  double total = 0.0;
  for (double w : initial) total += w;
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("initial distribution must sum to 1");

  AbsorptionResult result;
  result.residual = chain.residual;
  double steps = 0.0;
  bool infinite = false;
  for (int i = 0; i < chain.state_count(); ++i) {
    const double w = initial[static_cast<std::size_t>(i)];
    if (w == 0.0) continue;
    result.p_decision += w * chain.p_decision[static_cast<std::size_t>(i)];
    if (chain.expected_steps[static_cast<std::size_t>(i)] == kInf)
      infinite = true;
    else
      steps += w * chain.expected_steps[static_cast<std::size_t>(i)];
  }
  result.expected_steps = infinite ? kInf : steps;
  return result;
}

std::vector<Rational> exact_hitting_probabilities(const ChainAnalysis& chain) {
  const int S = static_cast<int>(chain.states.size());
  const std::int32_t DEC = S;
  std::vector<Rational> h(S + 1);
  h[DEC] = 1;
  const std::vector<std::int32_t> set = decision_solve_set(chain);
  const int m = static_cast<int>(set.size());
  if (m == 0) return h;
  std::vector<std::int32_t> pos(S + 1, -1);
  for (int r = 0; r < m; ++r) pos[set[r]] = r;
  std::vector<Rational> A(static_cast<std::size_t>(m) * m), b(m);
  for (int r = 0; r < m; ++r) {
    A[static_cast<std::size_t>(r) * m + r] = 1;
    for (const Transition& e : chain.rows[set[r]]) {
      if (e.target == DEC)
        b[r] += e.prob;
      else if (pos[e.target] >= 0)
        A[static_cast<std::size_t>(r) * m + pos[e.target]] -= e.prob;
    }
  }
  const std::vector<Rational> x = solve_dense_exact(std::move(A), std::move(b), m);
  for (int r = 0; r < m; ++r) h[set[r]] = x[r];
  return h;
}

Rational exact_decision_probability(const ChainAnalysis& chain) {
  const std::vector<Rational> h = exact_hitting_probabilities(chain);
  const std::vector<Rational> pi = default_initial_distribution_exact(chain);
  Rational p = 0;
  for (std::size_t i = 0; i < h.size(); ++i) p += pi[i] * h[i];
  return p;
}

Rational expected_ones_drift(const LumpedCounts& counts, const LumpedState& state) {
  const int z = lumped_ones(counts, state);
  Rational drift = 0;
  for (const auto& [p, t] : async_transitions(counts, state))
    drift += p * (lumped_ones(counts, t) - z);
  return drift;
}

Rational expected_disagreement_drift(const LumpedCounts& counts, const LumpedState& state) {
  const int n = counts.n;
  auto w = [n](int z) { return 2LL * z * (n - z); };
  const std::int64_t w0 = w(lumped_ones(counts, state));
  Rational drift = 0;
  for (const auto& [p, t] : async_transitions(counts, state))
    drift += p * (w(lumped_ones(counts, t)) - w0);
  return drift;
}

double poisson_binomial_tail(std::span<const double> probabilities, int threshold) {
  const int m = static_cast<int>(probabilities.size());
  for (double p : probabilities)
    if (!(p >= 0.0 && p <= 1.0))
      throw std::invalid_argument("Bernoulli probabilities must lie in [0,1]");
  if (threshold < 0 || threshold > m + 1)
    throw std::invalid_argument("threshold must lie in [0, count+1]");
  if (threshold <= 0) return 1.0;
  if (threshold > m) return 0.0;

  std::vector<double> pmf(static_cast<std::size_t>(m) + 1, 0.0);
  pmf[0] = 1.0;
  int filled = 0;
  for (double p : probabilities) {
    const double q = 1.0 - p;
    for (int j = filled + 1; j >= 1; --j) pmf[j] = pmf[j] * q + pmf[j - 1] * p;
    pmf[0] *= q;
    ++filled;
  }
  long double tail = 0.0L;  // sum upward from the small far-tail terms
  for (int j = m; j >= threshold; --j) tail += pmf[j];
  return static_cast<double>(tail);
}

SyncDecisionLaw synchronous_decision_law(const GameConfig& config) {
  config.validate();
  if (config.mode != Mode::Synchronous)
    throw std::invalid_argument("the round-decision law applies to the synchronous game");
  if (config.population.has_follower())
    throw std::domain_error("synchronous exact analysis supports Bernoulli-type agents only");

  int pinned_one = 0, pinned_zero = 0;
  std::vector<double> ps;
  for (const Role& role : config.population.roles()) {
    if (role.pins_one())
      ++pinned_one;
    else if (role.pins_zero())
      ++pinned_zero;
    else
      ps.push_back(role.p);
  }

  SyncDecisionLaw law;
  if (config.k <= pinned_one) {
    law.p = 1.0;
    law.decided_at_start = true;  // decision at t = 0, zero rounds elapse
    return law;
  }
  if (config.k > pinned_one + static_cast<int>(ps.size())) {
    law.p = 0.0;
    law.expected_T = kInf;
    law.expected_rounds = kInf;
    law.impossible = true;
    return law;
  }
  law.p = poisson_binomial_tail(ps, config.k - pinned_one);
  law.expected_T = (1.0 - law.p) / law.p;
  law.expected_rounds = 1.0 / law.p;
  return law;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double normal_round_probability(double n_eff, double p_agent, double k_eff) {
  if (!(n_eff >= 1.0)) throw std::invalid_argument("n_eff must be at least 1");
  if (!(p_agent > 0.0 && p_agent < 1.0))
    throw std::domain_error("degenerate variance: p_agent must lie strictly between 0 and 1");
  const double mean = n_eff * p_agent;
  const double sd = std::sqrt(n_eff * p_agent * (1.0 - p_agent));
  return 1.0 - normal_cdf((k_eff - mean) / sd);
}

NormalRoundBounds normal_round_bounds(const GameConfig& config) {
  if (config.population.has_follower())
    throw std::domain_error("round bounds apply to Bernoulli-type populations only");
  double pmax = -1.0, pmin = 2.0;
  int non_rejectors = 0;
  for (const Role& role : config.population.roles()) {
    double p;
    if (role.pins_zero())
      continue;
    else if (role.pins_one())
      p = 1.0;
    else
      p = role.p;
    ++non_rejectors;
    pmax = std::max(pmax, p);
    pmin = std::min(pmin, p);
  }
  if (non_rejectors == 0) throw std::domain_error("population has no non-rejector agents");
  NormalRoundBounds bounds;
  bounds.p_max = normal_round_probability(non_rejectors, pmax, config.k);
  bounds.p_min = normal_round_probability(non_rejectors, pmin, config.k);
  bounds.rounds_lower = 1.0 / bounds.p_max;
  bounds.rounds_upper = 1.0 / bounds.p_min;
  return bounds;
}

bool majority_zero_at_no_decision(const ChainAnalysis& chain) {
  const LumpedCounts& c = chain.counts;
  if (c.random_followers > 0 || c.minority_followers > 0 || c.neutralists > 0)
    throw std::domain_error("census requires a rejector/consentor/majority-follower population");
  if (c.majority_followers < 2)
    throw std::domain_error("census requires at least two majority followers");
  for (std::size_t i = 0; i < chain.states.size(); ++i)
    if (chain.classification[i] == StateClass::AbsorbingNoDecision &&
        chain.states[i].majority_ones != 0)
      return false;
  return true;
}

}  // namespace nkgame
