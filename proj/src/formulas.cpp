#include "nkgame/formulas.hpp"

#include <stdexcept>

namespace nkgame {

double random_follower_decision_bound(int n, int n_rejectors, int k) {
  if (n_rejectors < 0 || n_rejectors > n) throw std::invalid_argument("invalid rejector count");
  if (k < 1) throw std::invalid_argument("threshold must be at least 1");
  if (k > n - n_rejectors)
    throw std::domain_error("no decision is possible when k exceeds the non-rejector count");
  return static_cast<double>(n - n_rejectors) / (2.0 * k);
}

double majority_no_decision_bound(int n, int n_consentors, int n_rejectors) {
  if (n_consentors < 1) throw std::domain_error("the bound requires at least one consentor");
  const int followers = n - n_consentors - n_rejectors;
  if (followers < 2) throw std::invalid_argument("the bound requires at least two majority followers");
  const long long numer =
      static_cast<long long>(followers) * (n + n_consentors + n_rejectors - 1) +
      4LL * n_consentors * n_rejectors;
  const long long denom = 4LL * n_consentors * (n - n_consentors);
  return static_cast<double>(numer) / static_cast<double>(denom);
}

double expected_initial_disagreement(int n, int n_consentors, int n_rejectors) {
  if (n_consentors < 0 || n_rejectors < 0 || n_consentors + n_rejectors > n)
    throw std::invalid_argument("counts must satisfy n_c + n_r <= n");
  const long long followers = n - n_consentors - n_rejectors;
  const long long numer = followers * (n + n_consentors + n_rejectors - 1) +
                          4LL * n_consentors * n_rejectors;
  return static_cast<double>(numer) / 2.0;
}

double geometric_expected_failures(double p) {
  if (!(p > 0.0 && p <= 1.0)) throw std::domain_error("success probability must lie in (0,1]");
  return (1.0 - p) / p;
}

}  // namespace nkgame
