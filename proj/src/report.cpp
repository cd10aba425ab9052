#include "nkgame/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include <json.hpp>

namespace nkgame {

using ordered_json = nlohmann::ordered_json;

std::string format12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

double round12(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(format12(v).c_str(), nullptr);
}

std::string mode_name(Mode mode) { return mode == Mode::Asynchronous ? "async" : "sync"; }

namespace {

ordered_json num(double v) { return ordered_json(round12(v)); }

ordered_json bound_json(const BoundNote& b) {
  if (!b.value) return ordered_json{{"na", b.reason}};
  ordered_json j;
  j["value"] = num(*b.value);
  j["vacuous"] = b.vacuous;
  return j;
}

std::string csv_quote(const std::string& s) {
  bool needs = s.find_first_of(",\"\n") != std::string::npos;
  if (!needs) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_json(const RunSummary& s) {
  ordered_json j;
  j["schema_version"] = 1;

  ordered_json cfg;
  cfg["pop"] = s.config.pop;
  cfg["n"] = s.config.n;
  cfg["k"] = s.config.k;
  cfg["mode"] = mode_name(s.config.mode);
  if (s.config.seed) cfg["seed"] = *s.config.seed;
  if (s.config.trials) cfg["trials"] = *s.config.trials;
  if (s.config.max_steps) cfg["max_steps"] = *s.config.max_steps;
  j["config"] = cfg;

  if (s.mc) {
    j["p_decision"] = num(s.mc->p_decision_hat);
    j["ci99"] = ordered_json::array({num(s.mc->ci99_lo), num(s.mc->ci99_hi)});
    j["mean_decision_time"] =
        s.mc->mean_decision_time ? num(*s.mc->mean_decision_time) : ordered_json(nullptr);
    j["truncation_rate"] = num(s.mc->truncation_rate);
  } else if (s.exact) {
    j["p_decision"] = num(s.exact->p_decision);
  }

  if (s.exact) {
    ordered_json e;
    e["p_decision"] = num(s.exact->p_decision);
    e["p_no_decision"] = num(s.exact->p_no_decision);
    e["expected_steps"] =
        s.exact->expected_steps ? num(*s.exact->expected_steps) : ordered_json(nullptr);
    e["residual"] = num(s.exact->residual);
    e["states"] = s.exact->states;
    e["transient"] = s.exact->transient;
    e["absorbing_no_decision"] = s.exact->absorbing_no_decision;
    j["exact"] = e;
  }

  if (s.bounds) {
    ordered_json b;
    b["decision_upper"] = bound_json(s.bounds->decision_upper);
    b["no_decision_upper"] = bound_json(s.bounds->no_decision_upper);
    if (s.bounds->expected_initial_disagreement)
      b["expected_initial_disagreement"] = num(*s.bounds->expected_initial_disagreement);
    if (s.bounds->sync) {
      const SyncSection& y = *s.bounds->sync;
      ordered_json sj;
      sj["p"] = num(y.p);
      sj["expected_T"] = y.impossible ? ordered_json(nullptr) : num(y.expected_T);
      sj["expected_rounds"] = y.expected_rounds ? num(*y.expected_rounds) : ordered_json(nullptr);
      sj["decided_at_start"] = y.decided_at_start;
      sj["impossible"] = y.impossible;
      if (y.p_max) {
        sj["p_max"] = num(*y.p_max);
        sj["p_min"] = num(*y.p_min);
        sj["rounds_lower"] = num(*y.rounds_lower);
        sj["rounds_upper"] = num(*y.rounds_upper);
      } else if (!y.normal_reason.empty()) {
        sj["normal_na"] = y.normal_reason;
      }
      b["sync"] = sj;
    } else if (!s.bounds->sync_reason.empty()) {
      b["sync"] = ordered_json{{"na", s.bounds->sync_reason}};
    }
    j["bounds"] = b;
  }

  return j.dump(2) + "\n";
}

std::string to_csv(const RunSummary& s) {
  static const char* kHeader =
      "pop,n,k,mode,seed,trials,max_steps,"
      "p_decision,ci99_lo,ci99_hi,mean_decision_time,truncation_rate,"
      "exact_p_decision,exact_p_no_decision,exact_expected_steps,exact_residual,"
      "exact_states,exact_transient,exact_absorbing_no_decision,"
      "bound_decision_upper,bound_decision_vacuous,"
      "bound_no_decision_upper,bound_no_decision_vacuous,"
      "expected_initial_disagreement,"
      "sync_p,sync_expected_T,sync_expected_rounds,sync_decided_at_start,sync_impossible,"
      "sync_p_max,sync_p_min,sync_rounds_lower,sync_rounds_upper";

  std::vector<std::string> cells;
  auto blank = [&](std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) cells.emplace_back();
  };
  cells.push_back(csv_quote(s.config.pop));
  cells.push_back(std::to_string(s.config.n));
  cells.push_back(std::to_string(s.config.k));
  cells.push_back(mode_name(s.config.mode));
  cells.push_back(s.config.seed ? std::to_string(*s.config.seed) : "");
  cells.push_back(s.config.trials ? std::to_string(*s.config.trials) : "");
  cells.push_back(s.config.max_steps ? std::to_string(*s.config.max_steps) : "");

  if (s.mc) {
    cells.push_back(format12(round12(s.mc->p_decision_hat)));
    cells.push_back(format12(round12(s.mc->ci99_lo)));
    cells.push_back(format12(round12(s.mc->ci99_hi)));
    cells.push_back(s.mc->mean_decision_time ? format12(round12(*s.mc->mean_decision_time)) : "");
    cells.push_back(format12(round12(s.mc->truncation_rate)));
  } else if (s.exact) {
    cells.push_back(format12(round12(s.exact->p_decision)));
    blank(4);
  } else {
    blank(5);
  }

  if (s.exact) {
    cells.push_back(format12(round12(s.exact->p_decision)));
    cells.push_back(format12(round12(s.exact->p_no_decision)));
    cells.push_back(s.exact->expected_steps ? format12(round12(*s.exact->expected_steps)) : "");
    cells.push_back(format12(round12(s.exact->residual)));
    cells.push_back(std::to_string(s.exact->states));
    cells.push_back(std::to_string(s.exact->transient));
    cells.push_back(std::to_string(s.exact->absorbing_no_decision));
  } else {
    blank(7);
  }

  if (s.bounds) {
    const BoundsSection& b = *s.bounds;
    if (b.decision_upper.value) {
      cells.push_back(format12(round12(*b.decision_upper.value)));
      cells.push_back(b.decision_upper.vacuous ? "true" : "false");
    } else {
      blank(2);
    }
    if (b.no_decision_upper.value) {
      cells.push_back(format12(round12(*b.no_decision_upper.value)));
      cells.push_back(b.no_decision_upper.vacuous ? "true" : "false");
    } else {
      blank(2);
    }
    cells.push_back(b.expected_initial_disagreement
                        ? format12(round12(*b.expected_initial_disagreement))
                        : "");
    if (b.sync) {
      const SyncSection& y = *b.sync;
      cells.push_back(format12(round12(y.p)));
      cells.push_back(y.impossible ? "" : format12(round12(y.expected_T)));
      cells.push_back(y.expected_rounds ? format12(round12(*y.expected_rounds)) : "");
      cells.push_back(y.decided_at_start ? "true" : "false");
      cells.push_back(y.impossible ? "true" : "false");
      if (y.p_max) {
        cells.push_back(format12(round12(*y.p_max)));
        cells.push_back(format12(round12(*y.p_min)));
        cells.push_back(format12(round12(*y.rounds_lower)));
        cells.push_back(format12(round12(*y.rounds_upper)));
      } else {
        blank(4);
      }
    } else {
      blank(9);
    }
  } else {
    blank(14);
  }

  std::string row;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) row += ',';
    row += cells[i];
  }
  return std::string(kHeader) + "\n" + row + "\n";
}

}  // namespace nkgame
