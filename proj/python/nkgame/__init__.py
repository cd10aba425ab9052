"""Simulation and exact analysis of the (n,k) threshold opinion game."""

from nkgame._core import (  # noqa: F401
    Estimate,
    GameConfig,
    Mode,
    OpinionState,
    Population,
    PopulationParseError,
    Role,
    StateSpaceTooLargeError,
    TrialOutcome,
    __version__,
    decision_bound,
    disagreement_count,
    disagreement_drift,
    estimate,
    exact_analysis,
    expected_initial_disagreement,
    geometric_expected_failures,
    initial_state,
    majority_zero_at_no_decision,
    no_decision_bound,
    normal_cdf,
    normal_round_bounds,
    normal_round_probability,
    ones_count,
    ones_drift,
    poisson_binomial_tail,
    run_trial,
    sync_decision_law,
)
