#include "shapalloc/game.hpp"

#include <unordered_set>

#include "shapalloc/errors.hpp"

namespace shapalloc {

PlayerSet::PlayerSet(std::vector<std::string> ids) : ids_(std::move(ids)) {
  if (ids_.empty()) throw DomainError("player set must not be empty");
  if (ids_.size() > kMaxPlayers) {
    throw DomainError("at most " + std::to_string(kMaxPlayers) + " players are supported");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& id : ids_) {
    if (id.empty()) throw DomainError("player identifiers must be non-empty");
    if (!seen.insert(id).second) throw DomainError("duplicate player identifier '" + id + "'");
  }
}

std::optional<std::size_t> PlayerSet::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (ids_[i] == id) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> Coalition::members() const {
  std::vector<std::size_t> out;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  }
  return out;
}

std::string describe(Coalition coalition, const PlayerSet& players) {
  std::string out = "{";
  bool first = true;
  for (const auto i : coalition.members()) {
    if (!first) out += ',';
    out += i < players.size() ? players[i] : "#" + std::to_string(i);
    first = false;
  }
  out += '}';
  return out;
}

namespace {

void check_enumerable(std::size_t n) {
  if (n > kMaxExactPlayers) {
    throw EnumerationBoundError("exact enumeration supports at most " + std::to_string(kMaxExactPlayers) +
                                " players (got " + std::to_string(n) +
                                "); use the permutation sampler for larger games");
  }
}

}  // namespace

CharacteristicFunction CharacteristicFunction::from_values(PlayerSet players,
                                                           const std::map<Coalition, Rational>& values) {
  const std::size_t n = players.size();
  check_enumerable(n);
  const std::uint64_t count = std::uint64_t{1} << n;

  std::vector<Rational> table(count);
  std::vector<bool> present(count, false);
  present[0] = true;
  for (const auto& [coalition, value] : values) {
    if (coalition.mask() >= count) {
      throw DomainError("coalition mask " + std::to_string(coalition.mask()) + " references unknown players");
    }
    if (coalition.empty()) {
      if (value != 0) throw DomainError("the empty coalition has value 0 by definition");
      continue;
    }
    table[coalition.mask()] = value;
    present[coalition.mask()] = true;
  }
  for (std::uint64_t m = 1; m < count; ++m) {
    if (!present[m]) throw IncompleteGameError(describe(Coalition(m), players));
  }
  return CharacteristicFunction(std::move(players), std::move(table));
}

CharacteristicFunction CharacteristicFunction::from_function(PlayerSet players,
                                                             const std::function<Rational(Coalition)>& value) {
  const std::size_t n = players.size();
  check_enumerable(n);
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<Rational> table(count);
  for (std::uint64_t m = 1; m < count; ++m) table[m] = value(Coalition(m));
  return CharacteristicFunction(std::move(players), std::move(table));
}

Rational coalition_weight(std::size_t n, std::size_t s) {
  if (n < 1 || n > kMaxExactPlayers || s < 1 || s > n) {
    throw DomainError("coalition_weight requires 1 <= s <= n <= " + std::to_string(kMaxExactPlayers) +
                      " (got n=" + std::to_string(n) + ", s=" + std::to_string(s) + ")");
  }
  const auto ui = [](std::size_t k) { return static_cast<unsigned>(k); };
  return factorial(ui(n - s)) * factorial(ui(s - 1)) / factorial(ui(n));
}

Allocation shapley_exact(const CharacteristicFunction& game, const ShapleyOptions& options) {
  const std::size_t n = game.size();
  check_enumerable(n);

  std::vector<Rational> weights(n + 1);
  for (std::size_t s = 1; s <= n; ++s) weights[s] = coalition_weight(n, s);

  Allocation out{game.players(), std::vector<Rational>(n), {}};
  if (options.record_terms) {
    out.terms.resize(n);
    for (auto& t : out.terms) t.reserve(std::size_t{1} << (n - 1));
  }

  const std::uint64_t count = std::uint64_t{1} << n;
  Rational marginal;
  for (std::uint64_t m = 1; m < count; ++m) {
    const Coalition s(m);
    const Rational& w = weights[s.size()];
    for (std::uint64_t bits = m; bits != 0; bits &= bits - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(bits));
      marginal = game.value(s) - game.value(s.without(i));
      out.payoffs[i] += w * marginal;
      if (options.record_terms) out.terms[i].push_back({s, w, marginal});
    }
  }
  return out;
}

ValidationReport validate_game(const CharacteristicFunction& game) {
  const std::size_t n = game.size();
  const std::uint64_t full = Coalition::grand(n).mask();
  ValidationReport report;
  Rational sum;
  for (std::uint64_t s = 1; s <= full; ++s) {
    const std::uint64_t rest = full & ~s;
    // Submasks of the complement come in decreasing order; stopping below s
    // visits each unordered pair once.
    for (std::uint64_t t = rest; t > s; t = (t - 1) & rest) {
      const Coalition a(s);
      const Coalition b(t);
      sum = game.value(a) + game.value(b);
      const Rational& joint = game.value(a | b);
      if (joint < sum) report.violations.push_back({a, b, joint, sum});
    }
  }
  return report;
}

}  // namespace shapalloc
