// Acceptance suite: every release criterion as one pass/fail line, with the
// tolerance pinned in code. Exits with the number of failed criteria.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "chain_oracle.hpp"
#include "nkgame/dynamics.hpp"
#include "nkgame/exact.hpp"
#include "nkgame/formulas.hpp"
#include "nkgame/montecarlo.hpp"
#include "nkgame/report.hpp"

using namespace nkgame;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Population composed(int rejectors, int consentors, int random, int majority, int minority,
                    int neutral) {
  std::vector<Role> roles;
  for (int i = 0; i < rejectors; ++i) roles.push_back(Role::rejector());
  for (int i = 0; i < consentors; ++i) roles.push_back(Role::consentor());
  for (int i = 0; i < random; ++i) roles.push_back(Role::random_follower());
  for (int i = 0; i < majority; ++i) roles.push_back(Role::majority_follower());
  for (int i = 0; i < minority; ++i) roles.push_back(Role::minority_follower());
  for (int i = 0; i < neutral; ++i) roles.push_back(Role::neutralist());
  return Population(std::move(roles));
}

GameConfig async_config(Population pop, int k, std::uint64_t seed = 1) {
  GameConfig cfg;
  cfg.population = std::move(pop);
  cfg.k = k;
  cfg.mode = Mode::Asynchronous;
  cfg.master_seed = seed;
  cfg.validate();
  return cfg;
}

// 1. exact one-step drift of the ones count, rejectors + random followers
Outcome ones_drift_identity() {
  long checks = 0;
  for (int n = 2; n <= 12; ++n) {
    for (int nr = 0; nr <= n - 1; ++nr) {
      const LumpedCounts c{n, nr, 0, n - nr, 0, 0, 0};
      for (int z = 0; z <= n - nr; ++z) {
        const Rational drift = expected_ones_drift(c, LumpedState{z, 0, 0, 0});
        const Rational want(-static_cast<long long>(nr) * z, static_cast<long long>(n) * (n - 1));
        if (drift != want)
          return {false, "mismatch at n=" + std::to_string(n) + " nr=" + std::to_string(nr) +
                             " z=" + std::to_string(z)};
        ++checks;
      }
    }
  }
  return {true, std::to_string(checks) + " states, zero error (rational)"};
}

// 2. decision-probability bound on rejector + random-follower chains
Outcome decision_bound_sweep() {
  long rows = 0;
  for (int n = 3; n <= 10; ++n) {
    for (int nr = 1; nr <= n - 2; ++nr) {
      for (int k = 1; k <= n - nr; ++k) {
        const ChainAnalysis chain = build_chain(async_config(composed(nr, 0, n - nr, 0, 0, 0), k));
        const Rational p = exact_decision_probability(chain);
        const Rational bound(static_cast<long long>(n - nr), 2LL * k);
        if (p > bound)
          return {false, "bound violated at n=" + std::to_string(n) + " nr=" + std::to_string(nr) +
                             " k=" + std::to_string(k)};
        ++rows;
      }
    }
  }
  const Rational spot =
      exact_decision_probability(build_chain(async_config(composed(1, 0, 2, 0, 0, 0), 2)));
  if (spot != Rational(5, 12)) return {false, "spot value is not 5/12 exactly"};
  return {true, std::to_string(rows) + " (n,n_r,k) rows, spot 5/12 exact"};
}

// 3. no-decision bound on rejector + consentor + majority-follower chains
Outcome no_decision_bound_sweep() {
  long rows = 0;
  for (int n = 3; n <= 10; ++n) {
    for (int nc = 1; nc <= n - 2; ++nc) {
      for (int nr = 0; nr + nc + 2 <= n; ++nr) {
        for (int k = nc + 1; k <= n - nr; ++k) {
          const ChainAnalysis chain =
              build_chain(async_config(composed(nr, nc, 0, n - nc - nr, 0, 0), k));
          const Rational p_no = 1 - exact_decision_probability(chain);
          const long long followers = n - nc - nr;
          const Rational bound(followers * (n + nc + nr - 1) + 4LL * nc * nr,
                               4LL * nc * (n - nc));
          if (p_no > bound)
            return {false, "bound violated at n=" + std::to_string(n) + " nc=" + std::to_string(nc) +
                               " nr=" + std::to_string(nr) + " k=" + std::to_string(k)};
          ++rows;
        }
      }
    }
  }
  // spot chain: one consentor, one rejector, two majority followers. With the
  // threshold two above the consentor count the mixed state is transient and
  // the no-decision probability is exactly 1/2; one above, it is 1/4.
  const Rational spot_hi =
      1 - exact_decision_probability(build_chain(async_config(composed(1, 1, 0, 2, 0, 0), 3)));
  const Rational spot_lo =
      1 - exact_decision_probability(build_chain(async_config(composed(1, 1, 0, 2, 0, 0), 2)));
  if (spot_hi != Rational(1, 2)) return {false, "spot no-decision value is not 1/2 exactly"};
  if (spot_lo != Rational(1, 4)) return {false, "spot no-decision value is not 1/4 exactly"};
  return {true, std::to_string(rows) + " (n,n_c,n_r,k) rows, spots 1/2 and 1/4 exact"};
}

// 4. closed-form expected initial disagreement vs. full enumeration
Outcome initial_disagreement_formula() {
  long rows = 0;
  for (int n = 1; n <= 12; ++n) {
    for (int nc = 0; nc <= n; ++nc) {
      for (int nr = 0; nr + nc <= n; ++nr) {
        const int nf = n - nc - nr;
        long long sum = 0;  // sum of 2*z*(n-z) over all follower initializations
        for (int mask = 0; mask < (1 << nf); ++mask) {
          const long long z = nc + __builtin_popcount(static_cast<unsigned>(mask));
          sum += 2 * z * (n - z);
        }
        const Rational brute(sum, 1LL << nf);
        const Rational formula(static_cast<long long>(nf) * (n + nc + nr - 1) + 4LL * nc * nr, 2);
        if (brute != formula)
          return {false, "mismatch at n=" + std::to_string(n) + " nc=" + std::to_string(nc) +
                             " nr=" + std::to_string(nr)};
        ++rows;
      }
    }
  }
  if (expected_initial_disagreement(4, 1, 1) != 7.0) return {false, "spot (4,1,1) is not 7"};
  return {true, std::to_string(rows) + " partitions, exact; spot (4,1,1)=7"};
}

// 5. disagreement drift signs over every lumped state
Outcome disagreement_drift_signs() {
  long states = 0;
  for (int n = 2; n <= 10; ++n) {
    for (int nc = 0; nc <= n - 1; ++nc) {
      for (int nr = 0; nr + nc <= n - 1; ++nr) {
        const int nf = n - nc - nr;
        for (int m = 0; m <= nf; ++m) {
          const LumpedCounts maj{n, nr, nc, 0, nf, 0, 0};
          if (expected_disagreement_drift(maj, LumpedState{0, m, 0, 0}) > 0)
            return {false, "positive majority drift at n=" + std::to_string(n) +
                               " nc=" + std::to_string(nc) + " nr=" + std::to_string(nr) +
                               " m=" + std::to_string(m)};
          const LumpedCounts mino{n, nr, nc, 0, 0, nf, 0};
          if (expected_disagreement_drift(mino, LumpedState{0, 0, m, 0}) < 0)
            return {false, "negative minority drift at n=" + std::to_string(n) +
                               " nc=" + std::to_string(nc) + " nr=" + std::to_string(nr) +
                               " m=" + std::to_string(m)};
          ++states;
        }
      }
    }
  }
  return {true, std::to_string(states) + " lumped states per follower class, exact signs"};
}

// 6. almost-sure decision characterizations
Outcome almost_sure_decision() {
  long rows = 0;
  // a consentor plus random followers always decides for n_c < k <= n - n_r
  for (int n = 3; n <= 10; ++n) {
    for (int nc = 1; nc <= n - 1; ++nc) {
      for (int nr = 0; nr + nc <= n - 1; ++nr) {
        const int rf = n - nc - nr;
        if (rf < 1) continue;
        for (int k = nc + 1; k <= n - nr; ++k) {
          const ChainAnalysis chain = build_chain(async_config(composed(nr, nc, rf, 0, 0, 0), k));
          if (exact_decision_probability(chain) != 1)
            return {false, "consentor+random chain not almost sure at n=" + std::to_string(n) +
                               " nc=" + std::to_string(nc) + " nr=" + std::to_string(nr) +
                               " k=" + std::to_string(k)};
          const AbsorptionResult ar = absorption(chain, default_initial_distribution(chain));
          if (std::abs(ar.p_decision - 1.0) > 1e-10 || ar.residual > 1e-10)
            return {false, "float absorption drifted beyond 1e-10"};
          ++rows;
        }
      }
    }
  }
  // synchronous Bernoulli populations decide almost surely iff k <= n - n_r
  for (int nr = 0; nr <= 2; ++nr) {
    for (int a = 0; a <= 3; ++a) {        // Bernoulli(0.3)
      for (int b = 0; b <= 3; ++b) {      // Bernoulli(0.7)
        for (int nc = 0; nc <= 2; ++nc) {  // Bernoulli(1)
          const int n = nr + a + b + nc;
          if (n < 1) continue;
          std::vector<Role> roles;
          for (int i = 0; i < nr; ++i) roles.push_back(Role::rejector());
          for (int i = 0; i < a; ++i) roles.push_back(Role::bernoulli(0.3));
          for (int i = 0; i < b; ++i) roles.push_back(Role::bernoulli(0.7));
          for (int i = 0; i < nc; ++i) roles.push_back(Role::consentor());
          for (int k = 1; k <= n; ++k) {
            GameConfig cfg;
            cfg.population = Population(roles);
            cfg.k = k;
            cfg.mode = Mode::Synchronous;
            const SyncDecisionLaw law = synchronous_decision_law(cfg);
            const bool almost_sure = law.decided_at_start || (!law.impossible && law.p > 0.0);
            if (almost_sure != (k <= n - nr))
              return {false, "sync characterization failed at n=" + std::to_string(n) +
                                 " nr=" + std::to_string(nr) + " k=" + std::to_string(k)};
            ++rows;
          }
        }
      }
    }
  }
  return {true, std::to_string(rows) + " configurations, both game modes"};
}

// 7. absorbing no-decision states carry no majority-follower ones
Outcome majority_census() {
  long chains = 0;
  for (int n = 3; n <= 10; ++n) {
    for (int nc = 1; nc <= n - 2; ++nc) {
      for (int nr = 0; nr + nc + 2 <= n; ++nr) {
        for (int k = nc + 1; k <= n - nr; ++k) {
          const ChainAnalysis chain =
              build_chain(async_config(composed(nr, nc, 0, n - nc - nr, 0, 0), k));
          if (!majority_zero_at_no_decision(chain))
            return {false, "census failed at n=" + std::to_string(n) + " nc=" + std::to_string(nc) +
                               " nr=" + std::to_string(nr) + " k=" + std::to_string(k)};
          ++chains;
        }
      }
    }
  }
  return {true, std::to_string(chains) + " chains, every no-decision state clean"};
}

// 8. large-population synchronous round law
Outcome large_round_law(double& tail_seconds) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<double> ps(10'000, 0.5);
  const double p = poisson_binomial_tail(ps, 5'000);
  tail_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const double rounds = 1.0 / p;
  if (!(rounds >= 1.96 && rounds <= 2.00))
    return {false, "1/p = " + format12(rounds) + " outside [1.96, 2.00]"};
  if (tail_seconds >= 5.0)
    return {false, "tail took " + format12(tail_seconds) + "s (limit 5s)"};
  return {true, "1/p = " + format12(rounds) + ", tail in " + format12(tail_seconds) + "s"};
}

// 9. normal approximation quality at n = 400
Outcome normal_quality() {
  const std::vector<double> ps(400, 0.5);
  const double exact = poisson_binomial_tail(ps, 210);
  const double approx = normal_round_probability(400, 0.5, 210);
  const double err = std::abs(approx - exact);
  if (err > 0.03) return {false, "|approx - exact| = " + format12(err) + " > 0.03"};
  return {true, "|approx - exact| = " + format12(err) + " <= 0.03"};
}

// 10. Monte Carlo intervals cover the exact values across seeds
Outcome mc_coverage() {
  struct Spot {
    Population pop;
    int k;
    Rational exact;
  };
  const Spot spots[] = {
      {composed(1, 0, 2, 0, 0, 0), 2,
       exact_decision_probability(build_chain(async_config(composed(1, 0, 2, 0, 0, 0), 2)))},
      {composed(1, 1, 0, 2, 0, 0), 3,
       exact_decision_probability(build_chain(async_config(composed(1, 1, 0, 2, 0, 0), 3)))},
  };
  std::string detail;
  for (const Spot& spot : spots) {
    const double exact = to_double(spot.exact);
    int covered = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      GameConfig cfg = async_config(spot.pop, spot.k, seed);
      const Estimate est = estimate(cfg, 100'000, 0);
      if (est.ci99_lo <= exact && exact <= est.ci99_hi) ++covered;
    }
    detail += (detail.empty() ? "" : ", ") + std::to_string(covered) + "/20";
    if (covered < 19) return {false, "coverage " + std::to_string(covered) + "/20 below 19/20"};
  }
  return {true, "coverage " + detail + " at 100000 trials"};
}

// 11. summaries are byte-identical for 1, 4 and 8 workers
Outcome worker_determinism() {
  GameConfig cfg = async_config(composed(1, 0, 2, 0, 0, 0), 2, 2024);
  std::string json_ref, csv_ref;
  for (unsigned workers : {1u, 4u, 8u}) {
    const Estimate est = estimate(cfg, 50'000, workers);
    RunSummary s;
    s.config = {cfg.population.spec_string(), cfg.population.size(), cfg.k, cfg.mode,
                cfg.master_seed, 50'000, cfg.max_steps};
    s.mc = est;
    const std::string j = to_json(s), c = to_csv(s);
    if (json_ref.empty()) {
      json_ref = j;
      csv_ref = c;
    } else if (j != json_ref || c != csv_ref) {
      return {false, "summary bytes differ at workers=" + std::to_string(workers)};
    }
  }
  return {true, "JSON and CSV byte-identical across 1/4/8 workers"};
}

// 12. lumped chain vs. the full opinion-vector chain
Outcome lumping_equivalence() {
  struct Case {
    int r, c, rf, mf, mi, nn;
  };
  std::vector<Case> cases;
  for (int n = 1; n <= 8; ++n)
    for (int r = 0; r <= n; ++r)
      for (int c = 0; r + c <= n; ++c)
        for (int rf = 0; r + c + rf <= n; ++rf)
          for (int mf = 0; r + c + rf + mf <= n; ++mf)
            for (int mi = 0; r + c + rf + mf + mi <= n; ++mi) {
              const int nn = n - r - c - rf - mf - mi;
              if (n == 1 && (rf + mf + mi) > 0) continue;  // follower needs a neighbor
              cases.push_back({r, c, rf, mf, mi, nn});
            }

  std::atomic<std::size_t> next{0};
  std::mutex mu;
  double max_diff = 0.0;
  std::string failure;
  long comparisons = 0;
  auto worker = [&] {
    double local_max = 0.0;
    long local_cmp = 0;
    std::string local_fail;
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cases.size()) break;
      const Case& cs = cases[i];
      const Population pop = composed(cs.r, cs.c, cs.rf, cs.mf, cs.mi, cs.nn);
      const int n = pop.size();
      for (int k = 1; k <= n && local_fail.empty(); ++k) {
        const double full = oracle::full_chain_decision_probability(pop.roles(), k);
        GameConfig cfg;
        cfg.population = pop;
        cfg.k = k;
        const ChainAnalysis chain = build_chain(cfg);
        const double lumped = absorption(chain, default_initial_distribution(chain)).p_decision;
        const double diff = std::abs(full - lumped);
        local_max = std::max(local_max, diff);
        ++local_cmp;
        if (diff >= 1e-10)
          local_fail = "diff " + format12(diff) + " at pop=" + pop.spec_string() +
                       " k=" + std::to_string(k);
      }
      if (!local_fail.empty()) break;
    }
    std::lock_guard<std::mutex> lock(mu);
    max_diff = std::max(max_diff, local_max);
    comparisons += local_cmp;
    if (failure.empty() && !local_fail.empty()) failure = local_fail;
  };
  std::vector<std::thread> pool;
  const unsigned workers = std::max(2u, std::thread::hardware_concurrency());
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  if (!failure.empty()) return {false, failure};
  return {true, std::to_string(comparisons) + " (population,k) pairs, max |diff| = " +
                    format12(max_diff)};
}

}  // namespace

int main() {
  double tail_seconds = 0.0;
  auto large_round_law_entry = [&]() { return large_round_law(tail_seconds); };

  int failures = 0;
  int index = 0;
  auto report = [&](const char* name, double limit, const Outcome& outcome, double seconds) {
    ++index;
    const bool timely = limit <= 0.0 || seconds < limit;
    const bool pass = outcome.pass && timely;
    if (!pass) ++failures;
    std::printf("[%2d] %s  %6.2fs  %s", index, pass ? "PASS" : "FAIL", seconds, name);
    if (!outcome.detail.empty()) std::printf("  —  %s", outcome.detail.c_str());
    if (!timely) std::printf("  —  exceeded %.0fs limit", limit);
    std::printf("\n");
    std::fflush(stdout);
  };
  auto run = [&](const char* name, double limit, auto fn) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = fn();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(name, limit, outcome, secs);
  };

  run("ones-drift identity exact on rejector+random populations (n<=12)", 1.0, ones_drift_identity);
  run("decision probability within (n-n_r)/2k on every rejector+random chain (n<=10)", 10.0,
      decision_bound_sweep);
  run("no-decision probability within the disagreement bound on majority chains (n<=10)", 10.0,
      no_decision_bound_sweep);
  run("expected initial disagreement equals full enumeration (n<=12)", 0.0,
      initial_disagreement_formula);
  run("disagreement drift signs: majority <= 0, minority >= 0 (n<=10)", 0.0,
      disagreement_drift_signs);
  run("almost-sure decision: consentor+random chains; sync Bernoulli iff k<=n-n_r", 0.0,
      almost_sure_decision);
  run("every absorbing no-decision state has zero majority-follower ones (n<=10)", 0.0,
      majority_census);
  run("large-population round law: 1/p in [1.96,2.00] at n_n=10^4, k=5000", 0.0,
      large_round_law_entry);
  run("normal approximation within 0.03 of the exact tail (n=400, k=210)", 0.0, normal_quality);
  run("Wilson 99% intervals cover exact values in >=19/20 seeded runs", 60.0, mc_coverage);
  run("byte-identical summaries for 1, 4 and 8 workers", 0.0, worker_determinism);
  run("lumped chain equals the full opinion-vector chain within 1e-10 (n<=8)", 0.0,
      lumping_equivalence);

  std::printf("ACCEPTANCE: %d/12 criteria passed\n", 12 - failures);
  return failures;
}
