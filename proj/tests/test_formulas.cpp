#include <doctest.h>

#include <stdexcept>

#include "nkgame/formulas.hpp"

using namespace nkgame;

namespace {

// brute-force E[2*Z*(n-Z)] over every follower initialization
double brute_initial_disagreement(int n, int nc, int nr) {
  const int nf = n - nc - nr;
  double sum = 0.0;
  for (int mask = 0; mask < (1 << nf); ++mask) {
    const int z = nc + __builtin_popcount(static_cast<unsigned>(mask));
    sum += 2.0 * z * (n - z);
  }
  return sum / (1 << nf);
}

}  // namespace

TEST_SUITE("formulas") {

TEST_CASE("decision bound values") {
  CHECK(random_follower_decision_bound(10, 5, 3) == doctest::Approx(5.0 / 6.0).epsilon(1e-15));
  CHECK(random_follower_decision_bound(4, 0, 2) == 1.0);  // vacuous boundary
  // half rejectors, threshold about half: the bound tends to one half
  CHECK(random_follower_decision_bound(1'000'000, 500'000, 500'000) == 0.5);
  CHECK_THROWS_AS(random_follower_decision_bound(10, 5, 6), std::domain_error);
  CHECK_THROWS_AS(random_follower_decision_bound(10, 5, 0), std::invalid_argument);
}

TEST_CASE("no-decision bound values") {
  CHECK(majority_no_decision_bound(8, 4, 0) == doctest::Approx(44.0 / 64.0).epsilon(1e-15));
  CHECK(majority_no_decision_bound(4, 1, 1) == doctest::Approx(14.0 / 12.0).epsilon(1e-15));
  // no rejectors, consentors about half: tends to 3/4
  CHECK(majority_no_decision_bound(1'000'000, 500'000, 0) == doctest::Approx(0.75).epsilon(1e-5));
  CHECK_THROWS_AS(majority_no_decision_bound(8, 0, 2), std::domain_error);
  CHECK_THROWS_AS(majority_no_decision_bound(4, 2, 1), std::invalid_argument);
}

TEST_CASE("expected initial disagreement") {
  CHECK(expected_initial_disagreement(4, 1, 1) == 7.0);
  CHECK(expected_initial_disagreement(6, 2, 1) == 16.0);
  CHECK(expected_initial_disagreement(5, 5, 0) == 0.0);  // everyone agrees
  CHECK_THROWS_AS(expected_initial_disagreement(4, 3, 2), std::invalid_argument);
}

TEST_CASE("expected initial disagreement equals brute force, n <= 8") {
  for (int n = 1; n <= 8; ++n)
    for (int nc = 0; nc <= n; ++nc)
      for (int nr = 0; nr + nc <= n; ++nr)
        REQUIRE(expected_initial_disagreement(n, nc, nr) ==
                doctest::Approx(brute_initial_disagreement(n, nc, nr)).epsilon(1e-13));
}

TEST_CASE("the no-decision bound is the disagreement ratio, exactly") {
  for (int n = 3; n <= 50; ++n)
    for (int nc = 1; nc <= n - 2; ++nc)
      for (int nr = 0; nr + nc + 2 <= n; ++nr)
        REQUIRE(majority_no_decision_bound(n, nc, nr) ==
                expected_initial_disagreement(n, nc, nr) / (2.0 * nc * (n - nc)));
}

TEST_CASE("geometric expectation") {
  CHECK(geometric_expected_failures(1.0) == 0.0);
  CHECK(geometric_expected_failures(0.5) == 1.0);  // two rounds to decide on average
  CHECK(geometric_expected_failures(319.0 / 512.0) == doctest::Approx(193.0 / 319.0).epsilon(1e-14));
  CHECK_THROWS_AS(geometric_expected_failures(0.0), std::domain_error);
  CHECK_THROWS_AS(geometric_expected_failures(-0.5), std::domain_error);
}

}  // TEST_SUITE
