#pragma once

// Transferable-utility coalition games and the exact Shapley allocation.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shapalloc/rational.hpp"

namespace shapalloc {

/// Largest player count for which the 2^n value table is enumerated.
inline constexpr std::size_t kMaxExactPlayers = 20;
/// Largest player count representable by a Coalition bit mask.
inline constexpr std::size_t kMaxPlayers = 64;

/// Ordered, duplicate-free list of player identifiers.
class PlayerSet {
 public:
  explicit PlayerSet(std::vector<std::string> ids);

  std::size_t size() const noexcept { return ids_.size(); }
  const std::string& operator[](std::size_t i) const { return ids_[i]; }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  std::optional<std::size_t> index_of(std::string_view id) const;

  bool operator==(const PlayerSet&) const = default;

 private:
  std::vector<std::string> ids_;
};

/// A subset of players, bit i set when player i (in PlayerSet order) is a
/// member.
class Coalition {
 public:
  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint64_t mask) : mask_(mask) {}

  static constexpr Coalition singleton(std::size_t i) { return Coalition(std::uint64_t{1} << i); }
  static constexpr Coalition grand(std::size_t n) {
    return Coalition(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t mask() const noexcept { return mask_; }
  constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }
  constexpr bool empty() const noexcept { return mask_ == 0; }
  constexpr bool contains(std::size_t i) const noexcept { return (mask_ >> i) & 1U; }
  constexpr Coalition with(std::size_t i) const noexcept { return Coalition(mask_ | (std::uint64_t{1} << i)); }
  constexpr Coalition without(std::size_t i) const noexcept { return Coalition(mask_ & ~(std::uint64_t{1} << i)); }
  constexpr bool disjoint(Coalition other) const noexcept { return (mask_ & other.mask_) == 0; }
  constexpr Coalition operator|(Coalition other) const noexcept { return Coalition(mask_ | other.mask_); }

  std::vector<std::size_t> members() const;

  constexpr auto operator<=>(const Coalition&) const = default;

 private:
  std::uint64_t mask_ = 0;
};

/// "{A,B}" using the player identifiers; "{}" for the empty coalition.
std::string describe(Coalition coalition, const PlayerSet& players);

/// Total map from non-empty coalitions to values; v(empty) = 0 implicitly.
class CharacteristicFunction {
 public:
  /// Throws IncompleteGameError naming the first missing coalition (in mask
  /// order) and EnumerationBoundError when the player count exceeds
  /// kMaxExactPlayers. A value given for the empty coalition must be zero.
  static CharacteristicFunction from_values(PlayerSet players, const std::map<Coalition, Rational>& values);

  /// Tabulates `value` over every non-empty coalition.
  static CharacteristicFunction from_function(PlayerSet players,
                                              const std::function<Rational(Coalition)>& value);

  const PlayerSet& players() const noexcept { return players_; }
  std::size_t size() const noexcept { return players_.size(); }
  const Rational& value(Coalition s) const { return table_.at(s.mask()); }
  const Rational& grand_value() const { return table_.back(); }

 private:
  CharacteristicFunction(PlayerSet players, std::vector<Rational> table)
      : players_(std::move(players)), table_(std::move(table)) {}

  PlayerSet players_;
  std::vector<Rational> table_;  // indexed by mask, table_[0] == 0
};

/// One summand of a player's Shapley value.
struct ShapleyTerm {
  Coalition coalition;  // contains the player
  Rational weight;      // (n - |S|)! (|S| - 1)! / n!
  Rational marginal;    // v(S) - v(S \ {i})
};

struct Allocation {
  PlayerSet players;
  std::vector<Rational> payoffs;
  // terms[i] lists every coalition containing player i in increasing mask
  // order; empty when term recording was switched off.
  std::vector<std::vector<ShapleyTerm>> terms;
};

struct ShapleyOptions {
  bool record_terms = true;
};

/// (n - s)! (s - 1)! / n!, the probability that a uniformly random join
/// order places exactly the s - 1 other members of a fixed size-s coalition
/// ahead of the player. Requires 1 <= s <= n <= kMaxExactPlayers.
Rational coalition_weight(std::size_t n, std::size_t s);

Allocation shapley_exact(const CharacteristicFunction& game, const ShapleyOptions& options = {});

struct SuperadditivityViolation {
  Coalition first;
  Coalition second;
  Rational union_value;  // v(first | second)
  Rational sum_value;    // v(first) + v(second)
};

struct ValidationReport {
  std::vector<SuperadditivityViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Lists every unordered pair of disjoint non-empty coalitions S, T with
/// v(S u T) < v(S) + v(T). Visits (3^n - 2^(n+1) + 1) / 2 pairs.
ValidationReport validate_game(const CharacteristicFunction& game);

}  // namespace shapalloc
