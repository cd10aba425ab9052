#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "nkgame/model.hpp"
#include "nkgame/montecarlo.hpp"

namespace nkgame {

/// Round to 12 significant digits (the output precision): the double that
/// "%.12g" text parses back to. Applying it before serialization makes CSV
/// and JSON carry identical values.
double round12(double v);

/// "%.12g" formatting used for all floating-point output.
std::string format12(double v);

struct RunConfigEcho {
  std::string pop;
  int n = 0;
  int k = 1;
  Mode mode = Mode::Asynchronous;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> max_steps;
  // deliberately no worker count: summaries are byte-identical for any
  // worker count, so execution details stay out of them
};

struct ExactSection {
  double p_decision = 0.0;
  double p_no_decision = 0.0;
  std::optional<double> expected_steps;  // empty when infinite
  double residual = 0.0;
  std::size_t states = 0;
  std::size_t transient = 0;
  std::size_t absorbing_no_decision = 0;
};

struct BoundNote {
  std::optional<double> value;
  bool vacuous = false;
  std::string reason;  // set when value is absent ("n/a" cause)
};

struct SyncSection {
  double p = 0.0;
  double expected_T = 0.0;
  std::optional<double> expected_rounds;  // empty when infinite
  bool decided_at_start = false;
  bool impossible = false;
  std::optional<double> p_max, p_min, rounds_lower, rounds_upper;
  std::string normal_reason;  // why the normal bracket is absent
};

struct BoundsSection {
  BoundNote decision_upper;
  BoundNote no_decision_upper;
  std::optional<double> expected_initial_disagreement;
  std::optional<SyncSection> sync;
  std::string sync_reason;
};

/// One run's machine-readable summary; serialized to JSON or CSV with
/// identical values (schema_version 1).
struct RunSummary {
  RunConfigEcho config;
  std::optional<Estimate> mc;
  std::optional<ExactSection> exact;
  std::optional<BoundsSection> bounds;
};

std::string to_json(const RunSummary& summary);
std::string to_csv(const RunSummary& summary);

std::string mode_name(Mode mode);

}  // namespace nkgame
