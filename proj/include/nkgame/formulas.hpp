#pragma once

namespace nkgame {

/// Upper bound (n - n_r)/(2k) on the probability that the asynchronous
/// game with n_r rejectors and n - n_r random followers ever decides.
/// Requires 1 <= k <= n - n_r (beyond that no decision is possible).
/// Values above 1 are returned as-is; callers annotate them as vacuous.
double random_follower_decision_bound(int n, int n_rejectors, int k);

/// Upper bound on the probability that the asynchronous game with n_r
/// rejectors, n_c >= 1 consentors and at least two majority followers
/// never decides:
/// ((n-n_c-n_r)(n+n_c+n_r-1) + 4*n_c*n_r) / (4*n_c*(n-n_c)).
double majority_no_decision_bound(int n, int n_consentors, int n_rejectors);

/// E[W_0] = ((n-n_c-n_r)(n+n_c+n_r-1) + 4*n_c*n_r)/2 for followers
/// initialized i.i.d. Bernoulli(1/2); W is the ordered-pair disagreement
/// count.
double expected_initial_disagreement(int n, int n_consentors, int n_rejectors);

/// Mean of a zero-based geometric variable with success probability p:
/// (1-p)/p. Mean rounds to decide is this plus one.
double geometric_expected_failures(double p);

}  // namespace nkgame
