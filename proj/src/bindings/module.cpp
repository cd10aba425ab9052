#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "nkgame/dynamics.hpp"
#include "nkgame/exact.hpp"
#include "nkgame/formulas.hpp"
#include "nkgame/model.hpp"
#include "nkgame/montecarlo.hpp"
#include "nkgame/report.hpp"

namespace py = pybind11;
using namespace nkgame;

namespace {

py::object rational_to_fraction(const Rational& r) {
  const py::object Fraction = py::module_::import("fractions").attr("Fraction");
  std::ostringstream num, den;
  num << boost::multiprecision::numerator(r);
  den << boost::multiprecision::denominator(r);
  return Fraction(py::int_(py::str(num.str())), py::int_(py::str(den.str())));
}

GameConfig make_config(const Population& pop, int k, Mode mode, std::uint64_t seed,
                       std::optional<std::uint64_t> max_steps) {
  GameConfig cfg;
  cfg.population = pop;
  cfg.k = k;
  cfg.mode = mode;
  cfg.master_seed = seed;
  cfg.max_steps = max_steps.value_or(default_max_steps(mode));
  cfg.validate();
  return cfg;
}

py::dict exact_analysis(const GameConfig& cfg, std::size_t cap) {
  const ChainAnalysis chain = build_chain(cfg, cap);
  const AbsorptionResult ar = absorption(chain, default_initial_distribution(chain));
  py::dict d;
  d["p_decision"] = ar.p_decision;
  d["p_no_decision"] = 1.0 - ar.p_decision;
  d["expected_steps"] =
      std::isfinite(ar.expected_steps) ? py::object(py::float_(ar.expected_steps)) : py::none();
  d["residual"] = ar.residual;
  d["states"] = chain.state_count();
  std::size_t transient = 0, frozen = 0;
  for (StateClass c : chain.classification) {
    if (c == StateClass::Transient) ++transient;
    if (c == StateClass::AbsorbingNoDecision) ++frozen;
  }
  d["transient"] = transient;
  d["absorbing_no_decision"] = frozen;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Simulation and exact analysis of the (n,k) threshold opinion game";

  py::enum_<Mode>(m, "Mode")
      .value("ASYNC", Mode::Asynchronous)
      .value("SYNC", Mode::Synchronous);

  py::class_<Role>(m, "Role")
      .def_static("rejector", &Role::rejector)
      .def_static("consentor", &Role::consentor)
      .def_static("bernoulli", &Role::bernoulli, py::arg("p"))
      .def_static("neutralist", &Role::neutralist)
      .def_static("random_follower", &Role::random_follower)
      .def_static("majority_follower", &Role::majority_follower)
      .def_static("minority_follower", &Role::minority_follower)
      .def_property_readonly("p", [](const Role& r) { return r.p; })
      .def("__eq__", [](const Role& a, const Role& b) { return a == b; })
      .def("__repr__", [](const Role& r) { return "Role(" + role_name(r) + ")"; });

  py::class_<Population>(m, "Population")
      .def(py::init<std::vector<Role>>(), py::arg("roles"))
      .def_static("parse", [](const std::string& s) { return parse_population(s); }, py::arg("text"))
      .def("__len__", &Population::size)
      .def_property_readonly("roles", &Population::roles)
      .def("spec_string", &Population::spec_string)
      .def("__repr__",
           [](const Population& p) { return "Population(\"" + p.spec_string() + "\")"; });

  py::class_<GameConfig>(m, "GameConfig")
      .def(py::init(&make_config), py::arg("population"), py::arg("k"),
           py::arg("mode") = Mode::Asynchronous, py::arg("seed") = 1,
           py::arg("max_steps") = py::none())
      .def_readonly("population", &GameConfig::population)
      .def_readonly("k", &GameConfig::k)
      .def_readonly("mode", &GameConfig::mode)
      .def_readonly("seed", &GameConfig::master_seed)
      .def_readonly("max_steps", &GameConfig::max_steps);

  py::class_<OpinionState>(m, "OpinionState")
      .def_property_readonly("opinions",
                             [](const OpinionState& s) {
                               std::vector<int> v(s.opinions.begin(), s.opinions.end());
                               return v;
                             })
      .def_readonly("t", &OpinionState::t);

  py::class_<TrialOutcome>(m, "TrialOutcome")
      .def_readonly("decided", &TrialOutcome::decided)
      .def_readonly("decision_time", &TrialOutcome::decision_time)
      .def_readonly("frozen", &TrialOutcome::frozen)
      .def_readonly("freeze_time", &TrialOutcome::freeze_time)
      .def_readonly("truncated", &TrialOutcome::truncated)
      .def_readonly("final_ones", &TrialOutcome::final_ones);

  py::class_<Estimate>(m, "Estimate")
      .def_readonly("n_trials", &Estimate::n_trials)
      .def_readonly("n_decided", &Estimate::n_decided)
      .def_readonly("n_frozen", &Estimate::n_frozen)
      .def_readonly("n_truncated", &Estimate::n_truncated)
      .def_readonly("p_decision_hat", &Estimate::p_decision_hat)
      .def_readonly("ci99_lo", &Estimate::ci99_lo)
      .def_readonly("ci99_hi", &Estimate::ci99_hi)
      .def_readonly("mean_decision_time", &Estimate::mean_decision_time)
      .def_readonly("truncation_rate", &Estimate::truncation_rate);

  m.def("initial_state",
        [](const Population& pop, std::uint64_t seed) {
          Rng rng(seed);
          return initial_state(pop, rng);
        },
        py::arg("population"), py::arg("seed"));
  m.def("ones_count", &ones_count, py::arg("state"));
  m.def("disagreement_count", &disagreement_count, py::arg("state"));

  m.def("run_trial", &run_trial, py::arg("config"), py::arg("trial_index"));
  m.def("estimate", &estimate, py::arg("config"), py::arg("trials"), py::arg("workers") = 1,
        py::call_guard<py::gil_scoped_release>());

  m.def("exact_analysis", &exact_analysis, py::arg("config"), py::arg("cap") = 1'000'000);
  m.def("ones_drift",
        [](const GameConfig& cfg, int z) {
          const LumpedCounts c = lumped_counts(cfg.population);
          return rational_to_fraction(expected_ones_drift(c, LumpedState{z, 0, 0, 0}));
        },
        py::arg("config"), py::arg("z"),
        "Exact one-step drift of the ones count from z follower-ones "
        "(rejector+random populations) as a Fraction");
  m.def("disagreement_drift",
        [](const GameConfig& cfg, int random_ones, int majority_ones, int minority_ones,
           int neutral_ones) {
          const LumpedCounts c = lumped_counts(cfg.population);
          return rational_to_fraction(expected_disagreement_drift(
              c, LumpedState{random_ones, majority_ones, minority_ones, neutral_ones}));
        },
        py::arg("config"), py::arg("random_ones") = 0, py::arg("majority_ones") = 0,
        py::arg("minority_ones") = 0, py::arg("neutral_ones") = 0);
  m.def("majority_zero_at_no_decision",
        [](const GameConfig& cfg) { return majority_zero_at_no_decision(build_chain(cfg)); },
        py::arg("config"));

  m.def("poisson_binomial_tail",
        [](const std::vector<double>& ps, int threshold) {
          return poisson_binomial_tail(ps, threshold);
        },
        py::arg("probabilities"), py::arg("threshold"));
  m.def("sync_decision_law",
        [](const GameConfig& cfg) {
          const SyncDecisionLaw law = synchronous_decision_law(cfg);
          py::dict d;
          d["p"] = law.p;
          d["expected_T"] = law.expected_T;
          d["expected_rounds"] = law.expected_rounds;
          d["decided_at_start"] = law.decided_at_start;
          d["impossible"] = law.impossible;
          return d;
        },
        py::arg("config"));
  m.def("normal_cdf", &normal_cdf, py::arg("z"));
  m.def("normal_round_probability", &normal_round_probability, py::arg("n_eff"),
        py::arg("p_agent"), py::arg("k_eff"));
  m.def("normal_round_bounds",
        [](const GameConfig& cfg) {
          const NormalRoundBounds b = normal_round_bounds(cfg);
          py::dict d;
          d["p_max"] = b.p_max;
          d["p_min"] = b.p_min;
          d["rounds_lower"] = b.rounds_lower;
          d["rounds_upper"] = b.rounds_upper;
          return d;
        },
        py::arg("config"));

  m.def("decision_bound", &random_follower_decision_bound, py::arg("n"), py::arg("n_rejectors"),
        py::arg("k"));
  m.def("no_decision_bound", &majority_no_decision_bound, py::arg("n"), py::arg("n_consentors"),
        py::arg("n_rejectors"));
  m.def("expected_initial_disagreement", &expected_initial_disagreement, py::arg("n"),
        py::arg("n_consentors"), py::arg("n_rejectors"));
  m.def("geometric_expected_failures", &geometric_expected_failures, py::arg("p"));

  py::register_exception<PopulationParseError>(m, "PopulationParseError", PyExc_ValueError);
  py::register_exception<StateSpaceTooLarge>(m, "StateSpaceTooLargeError", PyExc_RuntimeError);

  m.attr("__version__") = "0.1.0";
}
