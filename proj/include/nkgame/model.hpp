#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nkgame/rng.hpp"

namespace nkgame {

enum class RoleTag {
  Rejector,
  Consentor,
  Bernoulli,
  RandomFollower,
  MajorityFollower,
  MinorityFollower,
};

/// Behavioral class of one agent. A neutralist is Bernoulli(1/2); there is
/// no separate tag. Rejector behaves like Bernoulli(0) and Consentor like
/// Bernoulli(1) under all dynamics.
struct Role {
  RoleTag tag = RoleTag::Rejector;
  double p = 0.0;  // meaningful for Bernoulli only

  static Role rejector() { return {RoleTag::Rejector, 0.0}; }
  static Role consentor() { return {RoleTag::Consentor, 0.0}; }
  static Role bernoulli(double p);
  static Role neutralist() { return bernoulli(0.5); }
  static Role random_follower() { return {RoleTag::RandomFollower, 0.0}; }
  static Role majority_follower() { return {RoleTag::MajorityFollower, 0.0}; }
  static Role minority_follower() { return {RoleTag::MinorityFollower, 0.0}; }

  bool is_follower() const {
    return tag == RoleTag::RandomFollower || tag == RoleTag::MajorityFollower ||
           tag == RoleTag::MinorityFollower;
  }
  // Opinion pinned to 0 (resp. 1) at all times.
  bool pins_zero() const { return tag == RoleTag::Rejector || (tag == RoleTag::Bernoulli && p == 0.0); }
  bool pins_one() const { return tag == RoleTag::Consentor || (tag == RoleTag::Bernoulli && p == 1.0); }

  bool operator==(const Role&) const = default;
};

std::string role_name(const Role& role);

/// Ordered list of roles; agent identity (and RNG consumption order) is the
/// list order. The social graph is complete: agent i's neighbors are all
/// other agents.
class Population {
 public:
  Population() = default;
  explicit Population(std::vector<Role> roles);

  int size() const { return static_cast<int>(roles_.size()); }
  const std::vector<Role>& roles() const { return roles_; }
  const Role& role(int i) const { return roles_[static_cast<std::size_t>(i)]; }

  int count(RoleTag tag) const;
  bool has_follower() const;

  /// Canonical "count*role" population string (run-length over equal roles).
  std::string spec_string() const;

 private:
  std::vector<Role> roles_;
};

class PopulationParseError : public std::runtime_error {
 public:
  PopulationParseError(const std::string& message, std::size_t column)
      : std::runtime_error(message), column_(column) {}
  /// 1-based column in the population string where parsing failed.
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Parses "2*rejector,1*consentor,3*majority" style strings. Roles:
/// rejector, consentor, neutralist, random, majority, minority,
/// bernoulli(p). A bare role means count 1.
Population parse_population(std::string_view text);

enum class Mode { Asynchronous, Synchronous };

inline constexpr std::uint64_t kDefaultMaxStepsAsync = 1'000'000;
inline constexpr std::uint64_t kDefaultMaxRoundsSync = 10'000;

inline std::uint64_t default_max_steps(Mode mode) {
  return mode == Mode::Asynchronous ? kDefaultMaxStepsAsync : kDefaultMaxRoundsSync;
}

struct GameConfig {
  Population population;
  int k = 1;
  Mode mode = Mode::Asynchronous;
  std::uint64_t master_seed = 1;
  std::uint64_t max_steps = kDefaultMaxStepsAsync;

  /// Throws std::invalid_argument on 1 <= k <= n, max_steps >= 1, or
  /// follower-with-no-neighbor violations.
  void validate() const;
};

struct OpinionState {
  std::vector<std::uint8_t> opinions;
  std::uint64_t t = 0;

  int size() const { return static_cast<int>(opinions.size()); }
};

/// Rejectors start at 0, consentors at 1, Bernoulli(p) agents draw
/// Bernoulli(p), followers draw Bernoulli(1/2). One draw per non-pinned
/// agent, in agent order.
OpinionState initial_state(const Population& population, Rng& rng);

/// Number of agents holding opinion 1.
int ones_count(const OpinionState& state);

/// Ordered-pair disagreement count, equal to 2*z*(n-z) on the complete
/// graph (the brute-force pair sum is kept in tests only).
std::int64_t disagreement_count(const OpinionState& state);

}  // namespace nkgame
