#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nkgame/dynamics.hpp"
#include "nkgame/exact.hpp"
#include "nkgame/formulas.hpp"
#include "nkgame/model.hpp"
#include "nkgame/montecarlo.hpp"
#include "nkgame/report.hpp"

using namespace nkgame;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitTruncation = 2;
constexpr int kExitStateCap = 3;
constexpr int kExitUsage = 64;       // bad population string / flags
constexpr int kExitUnsupported = 65; // analysis precondition not met

struct CommonOpts {
  std::string pop;
  int k = 1;
  std::string mode = "async";
  std::uint64_t seed = 1;
  std::uint64_t trials = 10000;
  std::uint64_t max_steps = 0;  // 0: default for the mode
  unsigned workers = 1;
  std::string format = "json";
  std::string out;
};

void add_common_flags(CLI::App* cmd, CommonOpts& o, bool with_mc) {
  cmd->add_option("--pop", o.pop, "population string, e.g. \"2*rejector,1*consentor,3*majority\"")
      ->required();
  cmd->add_option("--k", o.k, "decision threshold (1 <= k <= n)")->required();
  cmd->add_option("--mode", o.mode, "update mode")->check(CLI::IsMember({"async", "sync"}));
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", o.out, "output path (default: stdout)");
  if (with_mc) {
    cmd->add_option("--seed", o.seed, "master seed (trial streams derive from it)");
    cmd->add_option("--trials", o.trials, "number of independent trials");
    cmd->add_option("--max-steps", o.max_steps,
                    "step cap per trial (default 1e6 async steps / 1e4 sync rounds)");
    cmd->add_option("--workers", o.workers, "worker threads (0 = hardware)");
  }
}

Mode to_mode(const std::string& mode) {
  return mode == "sync" ? Mode::Synchronous : Mode::Asynchronous;
}

GameConfig make_config(const CommonOpts& o, const Population& pop) {
  GameConfig cfg;
  cfg.population = pop;
  cfg.k = o.k;
  cfg.mode = to_mode(o.mode);
  cfg.master_seed = o.seed;
  cfg.max_steps = o.max_steps ? o.max_steps : default_max_steps(cfg.mode);
  cfg.validate();
  return cfg;
}

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open output file '" << path << "'\n";
    return 74;
  }
  f << text;
  return 0;
}

int emit_summary(const RunSummary& summary, const CommonOpts& o) {
  return write_output(o.format == "csv" ? to_csv(summary) : to_json(summary), o.out);
}

RunConfigEcho echo_config(const CommonOpts& o, const GameConfig& cfg, bool with_mc) {
  RunConfigEcho e;
  e.pop = o.pop;
  e.n = cfg.population.size();
  e.k = cfg.k;
  e.mode = cfg.mode;
  if (with_mc) {
    e.seed = cfg.master_seed;
    e.trials = o.trials;
    e.max_steps = cfg.max_steps;
  }
  return e;
}

int cmd_simulate(const CommonOpts& o, const std::string& records_path) {
  const Population pop = parse_population(o.pop);
  const GameConfig cfg = make_config(o, pop);
  const std::vector<TrialOutcome> outcomes = run_trials(cfg, o.trials, o.workers);
  const Estimate est = aggregate(outcomes);

  if (!records_path.empty()) {
    std::ostringstream rec;
    rec << "trial,decided,decision_time,frozen,freeze_time,truncated,final_ones\n";
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      const TrialOutcome& t = outcomes[i];
      rec << i << ',' << (t.decided ? 1 : 0) << ','
          << (t.decision_time ? std::to_string(*t.decision_time) : "") << ',' << (t.frozen ? 1 : 0)
          << ',' << (t.freeze_time ? std::to_string(*t.freeze_time) : "") << ','
          << (t.truncated ? 1 : 0) << ',' << t.final_ones << '\n';
    }
    if (int rc = write_output(rec.str(), records_path); rc != 0) return rc;
  }

  RunSummary summary;
  summary.config = echo_config(o, cfg, true);
  summary.mc = est;
  if (int rc = emit_summary(summary, o); rc != 0) return rc;
  return est.truncation_rate > 0.10 ? kExitTruncation : 0;
}

ExactSection exact_section(const ChainAnalysis& chain, const AbsorptionResult& ar) {
  ExactSection e;
  e.p_decision = ar.p_decision;
  e.p_no_decision = 1.0 - ar.p_decision;
  if (std::isfinite(ar.expected_steps)) e.expected_steps = ar.expected_steps;
  e.residual = ar.residual;
  e.states = static_cast<std::size_t>(chain.state_count());
  for (StateClass c : chain.classification) {
    if (c == StateClass::Transient) ++e.transient;
    if (c == StateClass::AbsorbingNoDecision) ++e.absorbing_no_decision;
  }
  return e;
}

void dump_chain(const ChainAnalysis& chain, const std::string& path) {
  ordered_json j;
  j["schema_version"] = 1;
  j["k"] = chain.k;
  j["counts"] = {{"n", chain.counts.n},
                 {"rejectors", chain.counts.rejectors},
                 {"consentors", chain.counts.consentors},
                 {"random_followers", chain.counts.random_followers},
                 {"majority_followers", chain.counts.majority_followers},
                 {"minority_followers", chain.counts.minority_followers},
                 {"neutralists", chain.counts.neutralists}};
  auto class_name = [](StateClass c) {
    switch (c) {
      case StateClass::Transient: return "transient";
      case StateClass::AbsorbingDecision: return "absorbing_decision";
      case StateClass::AbsorbingNoDecision: return "absorbing_no_decision";
    }
    return "?";
  };
  ordered_json states = ordered_json::array();
  for (std::size_t i = 0; i < chain.states.size(); ++i) {
    const LumpedState& s = chain.states[i];
    ordered_json js;
    js["id"] = i;
    js["random_ones"] = s.random_ones;
    js["majority_ones"] = s.majority_ones;
    js["minority_ones"] = s.minority_ones;
    js["neutral_ones"] = s.neutral_ones;
    js["ones"] = lumped_ones(chain.counts, s);
    js["class"] = class_name(chain.classification[i]);
    js["p_decision"] = round12(chain.p_decision[i]);
    js["expected_steps"] = std::isfinite(chain.expected_steps[i])
                               ? ordered_json(round12(chain.expected_steps[i]))
                               : ordered_json(nullptr);
    states.push_back(js);
  }
  ordered_json dec;
  dec["id"] = chain.decision_state();
  dec["decision"] = true;
  dec["class"] = class_name(StateClass::AbsorbingDecision);
  dec["p_decision"] = 1.0;
  dec["expected_steps"] = 0.0;
  states.push_back(dec);
  j["states"] = states;

  ordered_json trans = ordered_json::array();
  for (std::size_t i = 0; i < chain.rows.size(); ++i) {
    for (const Transition& e : chain.rows[i]) {
      ordered_json t;
      t["from"] = i;
      t["to"] = e.target;
      std::ostringstream frac;
      frac << e.prob;
      t["prob"] = frac.str();
      t["value"] = round12(to_double(e.prob));
      trans.push_back(t);
    }
  }
  j["transitions"] = trans;
  write_output(j.dump(2) + "\n", path);
}

int cmd_exact(const CommonOpts& o, std::size_t cap, const std::string& dump_path) {
  const Population pop = parse_population(o.pop);
  const GameConfig cfg = make_config(o, pop);
  ChainAnalysis chain;
  try {
    chain = build_chain(cfg, cap);
  } catch (const StateSpaceTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitStateCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupported;
  }
  const std::vector<double> init = default_initial_distribution(chain);
  const AbsorptionResult ar = absorption(chain, init);
  if (!dump_path.empty()) dump_chain(chain, dump_path);

  RunSummary summary;
  summary.config = echo_config(o, cfg, false);
  summary.exact = exact_section(chain, ar);
  return emit_summary(summary, o);
}

BoundsSection make_bounds(const GameConfig& cfg) {
  BoundsSection b;
  const Population& pop = cfg.population;
  const int n = pop.size();
  const int k = cfg.k;

  std::optional<LumpedCounts> counts;
  try {
    counts = lumped_counts(pop);
  } catch (const std::domain_error&) {
    // generic Bernoulli population: chain-based quantities are n/a
  }

  if (counts && counts->random_followers > 0 && counts->consentors == 0 &&
      counts->majority_followers == 0 && counts->minority_followers == 0 &&
      counts->neutralists == 0) {
    if (k <= n - counts->rejectors) {
      const double v = random_follower_decision_bound(n, counts->rejectors, k);
      b.decision_upper.value = v;
      b.decision_upper.vacuous = v >= 1.0;  // a probability bound of 1 says nothing
    } else {
      b.decision_upper.reason = "no decision possible: k exceeds the non-rejector count";
    }
  } else {
    b.decision_upper.reason = "needs a rejector + random-follower population";
  }

  if (counts && counts->majority_followers > 0 && counts->random_followers == 0 &&
      counts->minority_followers == 0 && counts->neutralists == 0) {
    if (counts->consentors < 1) {
      b.no_decision_upper.reason = "needs at least one consentor";
    } else if (counts->majority_followers < 2) {
      b.no_decision_upper.reason = "needs at least two majority followers";
    } else if (k <= counts->consentors) {
      b.no_decision_upper.reason = "decision at t=0: k does not exceed the consentor count";
    } else if (k > n - counts->rejectors) {
      b.no_decision_upper.reason = "no decision possible: k exceeds the non-rejector count";
    } else {
      const double v = majority_no_decision_bound(n, counts->consentors, counts->rejectors);
      b.no_decision_upper.value = v;
      b.no_decision_upper.vacuous = v >= 1.0;
    }
  } else {
    b.no_decision_upper.reason = "needs a rejector/consentor/majority-follower population";
  }

  if (counts)
    b.expected_initial_disagreement =
        expected_initial_disagreement(n, counts->consentors, counts->rejectors);

  if (cfg.mode != Mode::Synchronous) {
    b.sync_reason = "round law applies to --mode sync";
  } else if (pop.has_follower()) {
    b.sync_reason = "round law needs a Bernoulli-type population";
  } else {
    const SyncDecisionLaw law = synchronous_decision_law(cfg);
    SyncSection y;
    y.p = law.p;
    y.expected_T = law.expected_T;
    if (std::isfinite(law.expected_rounds) || law.decided_at_start)
      y.expected_rounds = law.decided_at_start ? 0.0 : law.expected_rounds;
    y.decided_at_start = law.decided_at_start;
    y.impossible = law.impossible;
    try {
      const NormalRoundBounds nb = normal_round_bounds(cfg);
      y.p_max = nb.p_max;
      y.p_min = nb.p_min;
      y.rounds_lower = nb.rounds_lower;
      y.rounds_upper = nb.rounds_upper;
    } catch (const std::domain_error& e) {
      y.normal_reason = e.what();
    }
    b.sync = y;
  }
  return b;
}

int cmd_bounds(const CommonOpts& o) {
  const Population pop = parse_population(o.pop);
  const GameConfig cfg = make_config(o, pop);
  RunSummary summary;
  summary.config = echo_config(o, cfg, false);
  summary.bounds = make_bounds(cfg);
  return emit_summary(summary, o);
}

// ---- verify ---------------------------------------------------------------

struct VerifyRow {
  std::string config;
  std::string check;
  std::optional<double> exact, bound, mc, ci_lo, ci_hi;
  bool pass = true;
};

std::string verify_csv(const std::vector<VerifyRow>& rows) {
  std::string out = "config,check,exact,bound,mc,ci_lo,ci_hi,pass\n";
  auto cell = [](const std::optional<double>& v) { return v ? format12(round12(*v)) : std::string(); };
  for (const VerifyRow& r : rows) {
    out += "\"" + r.config + "\"," + r.check + ',' + cell(r.exact) + ',' + cell(r.bound) + ',' +
           cell(r.mc) + ',' + cell(r.ci_lo) + ',' + cell(r.ci_hi) + ',' +
           (r.pass ? "true" : "false") + '\n';
  }
  return out;
}

GameConfig async_config(const Population& pop, int k) {
  GameConfig cfg;
  cfg.population = pop;
  cfg.k = k;
  cfg.mode = Mode::Asynchronous;
  cfg.validate();
  return cfg;
}

Population composed(int rejectors, int consentors, int random, int majority, int minority) {
  std::vector<Role> roles;
  for (int i = 0; i < rejectors; ++i) roles.push_back(Role::rejector());
  for (int i = 0; i < consentors; ++i) roles.push_back(Role::consentor());
  for (int i = 0; i < random; ++i) roles.push_back(Role::random_follower());
  for (int i = 0; i < majority; ++i) roles.push_back(Role::majority_follower());
  for (int i = 0; i < minority; ++i) roles.push_back(Role::minority_follower());
  return Population(std::move(roles));
}

void battery_drift(std::vector<VerifyRow>& rows) {
  for (int n = 2; n <= 12; ++n) {
    double max_err = 0.0;
    bool ok = true;
    for (int nr = 0; nr <= n - 1; ++nr) {
      LumpedCounts c;
      c.n = n;
      c.rejectors = nr;
      c.random_followers = n - nr;
      for (int z = 0; z <= n - nr; ++z) {
        const Rational drift = expected_ones_drift(c, LumpedState{z, 0, 0, 0});
        const Rational expect = Rational(-static_cast<long long>(nr) * z,
                                         static_cast<long long>(n) * (n - 1));
        if (drift != expect) ok = false;
        max_err = std::max(max_err, std::abs(to_double(drift - expect)));
      }
    }
    VerifyRow r;
    r.config = "n=" + std::to_string(n) + " rejectors+random";
    r.check = "ones_drift_identity";
    r.exact = max_err;
    r.bound = 0.0;
    r.pass = ok;
    rows.push_back(r);
  }
}

void battery_decision_bound(std::vector<VerifyRow>& rows, int n_max) {
  for (int n = 3; n <= n_max; ++n) {
    for (int nr = 1; nr <= n - 2; ++nr) {
      for (int k = 1; k <= n - nr; ++k) {
        const Population pop = composed(nr, 0, n - nr, 0, 0);
        const ChainAnalysis chain = build_chain(async_config(pop, k));
        const Rational p = exact_decision_probability(chain);
        const Rational bound(static_cast<long long>(n - nr), 2LL * k);
        VerifyRow r;
        r.config = "pop=" + pop.spec_string() + " k=" + std::to_string(k);
        r.check = "decision_bound";
        r.exact = to_double(p);
        r.bound = to_double(bound);
        r.pass = p <= bound;
        rows.push_back(r);
      }
    }
  }
}

void battery_no_decision_bound(std::vector<VerifyRow>& rows, int n_max) {
  for (int n = 3; n <= n_max; ++n) {
    for (int nc = 1; nc <= n - 2; ++nc) {
      for (int nr = 0; nr + nc + 2 <= n; ++nr) {
        const int mf = n - nc - nr;
        for (int k = nc + 1; k <= n - nr; ++k) {
          const Population pop = composed(nr, nc, 0, mf, 0);
          const ChainAnalysis chain = build_chain(async_config(pop, k));
          const Rational p_no = 1 - exact_decision_probability(chain);
          const double bound = majority_no_decision_bound(n, nc, nr);
          VerifyRow r;
          r.config = "pop=" + pop.spec_string() + " k=" + std::to_string(k);
          r.check = "no_decision_bound";
          r.exact = to_double(p_no);
          r.bound = bound;
          r.pass = to_double(p_no) <= bound + 1e-12;
          rows.push_back(r);

          VerifyRow census;
          census.config = r.config;
          census.check = "majority_zero_census";
          census.pass = majority_zero_at_no_decision(chain);
          rows.push_back(census);
        }
      }
    }
  }
}

void battery_mc(std::vector<VerifyRow>& rows, std::uint64_t trials, std::uint64_t seed,
                unsigned workers) {
  struct Spot {
    const char* pop;
    int k;
    double exact;
  };
  // exact values come from the rational chain solve (asserted by the tests)
  const Spot spots[] = {{"1*rejector,2*random", 2, 5.0 / 12.0},
                        {"1*consentor,1*rejector,2*majority", 3, 0.5}};
  for (const Spot& s : spots) {
    GameConfig cfg;
    cfg.population = parse_population(s.pop);
    cfg.k = s.k;
    cfg.mode = Mode::Asynchronous;
    cfg.master_seed = seed;
    cfg.max_steps = default_max_steps(cfg.mode);
    const Estimate est = estimate(cfg, trials, workers);
    VerifyRow r;
    r.config = std::string("pop=") + s.pop + " k=" + std::to_string(s.k);
    r.check = "mc_ci_covers_exact";
    r.exact = s.exact;
    r.mc = est.p_decision_hat;
    r.ci_lo = est.ci99_lo;
    r.ci_hi = est.ci99_hi;
    r.pass = est.ci99_lo <= s.exact && s.exact <= est.ci99_hi;
    rows.push_back(r);
  }
}

int run_grid(const std::string& grid_path, std::vector<VerifyRow>& rows, std::uint64_t trials,
             std::uint64_t seed, unsigned workers) {
  std::ifstream f(grid_path);
  if (!f) {
    std::cerr << "error: cannot open grid file '" << grid_path << "'\n";
    return kExitUsage;
  }
  ordered_json grid;
  try {
    f >> grid;
  } catch (const std::exception& e) {
    std::cerr << "error: invalid grid JSON: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!grid.is_array()) {
    std::cerr << "error: grid file must be a JSON array of run specs\n";
    return kExitUsage;
  }
  for (const auto& item : grid) {
    GameConfig cfg;
    cfg.population = parse_population(item.at("pop").get<std::string>());
    cfg.k = item.at("k").get<int>();
    cfg.mode = to_mode(item.value("mode", "async"));
    cfg.master_seed = item.value("seed", seed);
    cfg.max_steps = default_max_steps(cfg.mode);
    cfg.validate();
    const std::uint64_t row_trials = item.value("trials", trials);

    VerifyRow r;
    r.config = "pop=" + cfg.population.spec_string() + " k=" + std::to_string(cfg.k) +
               " mode=" + mode_name(cfg.mode);

    std::optional<double> p_exact;
    std::optional<LumpedCounts> counts;
    if (cfg.mode == Mode::Asynchronous) {
      try {
        const ChainAnalysis chain = build_chain(cfg);
        counts = chain.counts;
        p_exact = absorption(chain, default_initial_distribution(chain)).p_decision;
      } catch (const std::exception&) {
        // not chain-analyzable; MC-only row
      }
    }

    const bool majority_shape = counts && counts->consentors >= 1 &&
                                counts->majority_followers >= 2 &&
                                counts->random_followers == 0 &&
                                counts->minority_followers == 0 && counts->neutralists == 0 &&
                                cfg.k > counts->consentors &&
                                cfg.k <= counts->n - counts->rejectors;
    const bool random_shape = counts && counts->random_followers > 0 &&
                              counts->consentors == 0 && counts->majority_followers == 0 &&
                              counts->minority_followers == 0 && counts->neutralists == 0 &&
                              cfg.k <= counts->n - counts->rejectors;

    const Estimate est = estimate(cfg, row_trials, workers);
    r.mc = est.p_decision_hat;
    r.ci_lo = est.ci99_lo;
    r.ci_hi = est.ci99_hi;

    if (majority_shape) {
      r.check = "no_decision_bound";
      r.exact = 1.0 - *p_exact;
      r.bound = majority_no_decision_bound(counts->n, counts->consentors, counts->rejectors);
      r.mc = 1.0 - est.p_decision_hat;
      r.ci_lo = 1.0 - est.ci99_hi;
      r.ci_hi = 1.0 - est.ci99_lo;
      r.pass = (*r.exact <= *r.bound + 1e-12) && (*r.ci_lo <= *r.exact && *r.exact <= *r.ci_hi);
    } else if (random_shape) {
      r.check = "decision_bound";
      r.exact = p_exact;
      r.bound = random_follower_decision_bound(counts->n, counts->rejectors, cfg.k);
      r.pass = (*r.exact <= *r.bound + 1e-12) && (*r.ci_lo <= *r.exact && *r.exact <= *r.ci_hi);
    } else {
      r.check = "mc_exact";
      r.exact = p_exact;
      r.pass = !p_exact || (*r.ci_lo <= *p_exact && *p_exact <= *r.ci_hi);
    }
    rows.push_back(r);
  }
  return 0;
}

int cmd_verify(const std::string& grid_path, std::uint64_t trials, std::uint64_t seed,
               unsigned workers, const std::string& out) {
  std::vector<VerifyRow> rows;
  if (grid_path.empty()) {
    battery_drift(rows);
    battery_decision_bound(rows, 8);
    battery_no_decision_bound(rows, 8);
    battery_mc(rows, trials, seed, workers);
  } else {
    if (int rc = run_grid(grid_path, rows, trials, seed, workers); rc != 0) return rc;
  }
  if (int rc = write_output(verify_csv(rows), out); rc != 0) return rc;
  int failures = 0;
  for (const VerifyRow& r : rows) {
    if (!r.pass) {
      ++failures;
      std::cerr << "FAIL " << r.check << " " << r.config;
      if (r.exact) std::cerr << " exact=" << format12(*r.exact);
      if (r.bound) std::cerr << " bound=" << format12(*r.bound);
      if (r.ci_lo) std::cerr << " ci=[" << format12(*r.ci_lo) << "," << format12(*r.ci_hi) << "]";
      std::cerr << "\n";
    }
  }
  if (failures > 0) {
    std::cerr << failures << " check(s) failed\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulation and exact analysis of the (n,k) threshold opinion game"};
  app.require_subcommand(1);

  CommonOpts sim_opts;
  std::string records_path;
  CLI::App* sim = app.add_subcommand("simulate", "Monte Carlo estimate of the decision probability");
  add_common_flags(sim, sim_opts, true);
  sim->add_option("--records", records_path, "write per-trial records CSV to this path");

  CommonOpts exact_opts;
  std::size_t cap = 1'000'000;
  std::string dump_path;
  CLI::App* exact = app.add_subcommand("exact", "exact absorption analysis of the reduced chain");
  add_common_flags(exact, exact_opts, false);
  exact->add_option("--cap", cap, "lumped state-space cap");
  exact->add_option("--dump", dump_path, "write the full chain (states, matrix, classes) as JSON");

  CommonOpts bounds_opts;
  CLI::App* bounds = app.add_subcommand("bounds", "closed-form bounds and laws for the population");
  add_common_flags(bounds, bounds_opts, false);

  std::string grid_path, verify_out;
  std::uint64_t verify_trials = 20000, verify_seed = 1;
  unsigned verify_workers = 0;
  CLI::App* verify = app.add_subcommand("verify", "cross-check exact values, bounds and Monte Carlo");
  verify->add_option("--grid", grid_path, "JSON array of {pop,k,mode,trials} run specs");
  verify->add_option("--trials", verify_trials, "Monte Carlo trials per cross-check row");
  verify->add_option("--seed", verify_seed, "master seed for cross-check rows");
  verify->add_option("--workers", verify_workers, "worker threads (0 = hardware)");
  verify->add_option("--out", verify_out, "report CSV path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (sim->parsed()) return cmd_simulate(sim_opts, records_path);
    if (exact->parsed()) return cmd_exact(exact_opts, cap, dump_path);
    if (bounds->parsed()) return cmd_bounds(bounds_opts);
    if (verify->parsed())
      return cmd_verify(grid_path, verify_trials, verify_seed, verify_workers, verify_out);
  } catch (const PopulationParseError& e) {
    std::cerr << "error: invalid population string: " << e.what() << "\n";
    return kExitUsage;
  } catch (const StateSpaceTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitStateCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 70;  // EX_SOFTWARE
  }
  return 0;
}
