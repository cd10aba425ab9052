#include "nkgame/model.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

namespace nkgame {

Role Role::bernoulli(double p) {
  if (!std::isfinite(p) || p < 0.0 || p > 1.0)
    throw std::invalid_argument("Bernoulli probability must be a finite number in [0,1]");
  return {RoleTag::Bernoulli, p};
}

std::string role_name(const Role& role) {
  switch (role.tag) {
    case RoleTag::Rejector: return "rejector";
    case RoleTag::Consentor: return "consentor";
    case RoleTag::RandomFollower: return "random";
    case RoleTag::MajorityFollower: return "majority";
    case RoleTag::MinorityFollower: return "minority";
    case RoleTag::Bernoulli: {
      if (role.p == 0.5) return "neutralist";
      std::ostringstream os;
      os << "bernoulli(" << role.p << ")";
      return os.str();
    }
  }
  return "?";
}

Population::Population(std::vector<Role> roles) : roles_(std::move(roles)) {
  if (roles_.empty()) throw std::invalid_argument("population must contain at least one agent");
}

int Population::count(RoleTag tag) const {
  int c = 0;
  for (const Role& r : roles_)
    if (r.tag == tag) ++c;
  return c;
}

bool Population::has_follower() const {
  for (const Role& r : roles_)
    if (r.is_follower()) return true;
  return false;
}

std::string Population::spec_string() const {
  std::string out;
  std::size_t i = 0;
  while (i < roles_.size()) {
    std::size_t j = i;
    while (j < roles_.size() && roles_[j] == roles_[i]) ++j;
    if (!out.empty()) out += ',';
    out += std::to_string(j - i) + "*" + role_name(roles_[i]);
    i = j;
  }
  return out;
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw PopulationParseError(what + " at column " + std::to_string(pos + 1), pos + 1);
  }
};

long parse_count(Cursor& c) {
  std::size_t start = c.pos;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
  long value = 0;
  auto res = std::from_chars(c.text.data() + start, c.text.data() + c.pos, value);
  if (res.ec != std::errc() || c.pos == start) c.fail("expected a count");
  if (value < 1) c.fail("count must be at least 1");
  return value;
}

std::string parse_word(Cursor& c) {
  std::size_t start = c.pos;
  while (!c.done() && (std::isalpha(static_cast<unsigned char>(c.peek())) || c.peek() == '_')) ++c.pos;
  if (c.pos == start) c.fail("expected a role name");
  std::string word(c.text.substr(start, c.pos - start));
  for (char& ch : word) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return word;
}

Role parse_role(Cursor& c) {
  std::size_t role_col = c.pos;
  std::string word = parse_word(c);
  if (word == "rejector") return Role::rejector();
  if (word == "consentor") return Role::consentor();
  if (word == "neutralist") return Role::neutralist();
  if (word == "random") return Role::random_follower();
  if (word == "majority") return Role::majority_follower();
  if (word == "minority") return Role::minority_follower();
  if (word == "bernoulli") {
    c.skip_ws();
    if (c.done() || c.peek() != '(') c.fail("bernoulli needs a probability, e.g. bernoulli(0.3)");
    ++c.pos;
    c.skip_ws();
    std::size_t start = c.pos;
    while (!c.done() && c.peek() != ')') ++c.pos;
    if (c.done()) c.fail("unclosed '(' in bernoulli(p)");
    std::string num(c.text.substr(start, c.pos - start));
    ++c.pos;  // consume ')'
    try {
      std::size_t used = 0;
      double p = std::stod(num, &used);
      while (used < num.size() && std::isspace(static_cast<unsigned char>(num[used]))) ++used;
      if (used != num.size()) throw std::invalid_argument("trailing characters");
      return Role::bernoulli(p);
    } catch (const PopulationParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw PopulationParseError(std::string("invalid bernoulli probability '") + num + "' at column " +
                                     std::to_string(start + 1) + " (" + e.what() + ")",
                                 start + 1);
    }
  }
  throw PopulationParseError("unknown role '" + word + "' at column " + std::to_string(role_col + 1),
                             role_col + 1);
}

}  // namespace

Population parse_population(std::string_view text) {
  Cursor c{text};
  std::vector<Role> roles;
  while (true) {
    c.skip_ws();
    if (c.done()) c.fail("expected a population term");
    long count = 1;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      count = parse_count(c);
      c.skip_ws();
      if (c.done() || c.peek() != '*') c.fail("expected '*' after count");
      ++c.pos;
      c.skip_ws();
    }
    Role role = parse_role(c);
    for (long i = 0; i < count; ++i) roles.push_back(role);
    c.skip_ws();
    if (c.done()) break;
    if (c.peek() != ',') c.fail("expected ',' between terms");
    ++c.pos;
  }
  return Population(std::move(roles));
}

void GameConfig::validate() const {
  const int n = population.size();
  if (n < 1) throw std::invalid_argument("population must contain at least one agent");
  if (k < 1 || k > n) throw std::invalid_argument("threshold k must satisfy 1 <= k <= n");
  if (max_steps < 1) throw std::invalid_argument("max_steps must be at least 1");
  if (n == 1 && population.has_follower())
    throw std::invalid_argument("a follower agent needs at least one neighbor (n >= 2)");
}

OpinionState initial_state(const Population& population, Rng& rng) {
  OpinionState state;
  state.opinions.reserve(population.roles().size());
  for (const Role& role : population.roles()) {
    switch (role.tag) {
      case RoleTag::Rejector: state.opinions.push_back(0); break;
      case RoleTag::Consentor: state.opinions.push_back(1); break;
      case RoleTag::Bernoulli:
        state.opinions.push_back(static_cast<std::uint8_t>(rng.bernoulli(role.p)));
        break;
      default:  // followers start Bernoulli(1/2)
        state.opinions.push_back(static_cast<std::uint8_t>(rng.bernoulli(0.5)));
        break;
    }
  }
  state.t = 0;
  return state;
}

int ones_count(const OpinionState& state) {
  int z = 0;
  for (std::uint8_t x : state.opinions) z += x;
  return z;
}

std::int64_t disagreement_count(const OpinionState& state) {
  const std::int64_t n = state.size();
  const std::int64_t z = ones_count(state);
  return 2 * z * (n - z);
}

}  // namespace nkgame
