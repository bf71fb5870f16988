#pragma once

// Innovation-factor adjustment of the classical Shapley allocation.
//
// Each player carries a factor G_i (its share of innovation influence) and a
// deviation dG_i = G_i - 1/n from the uniform share. Two adjustments are
// offered:
//
//   kPerCoalition:  phi'_i = sum_{S containing i} W(|S|) * ([v(S) - v(S\i)] + v(S) * dG_i)
//                          = phi_i + dG_i * A_i,   A_i = sum_{S containing i} W(|S|) v(S)
//   kGrandCoalition: phi'_i = phi_i + v(N) * dG_i
//
// The grand-coalition form is efficient whenever sum G_i = 1; the
// per-coalition form generally is not, and its surplus is reported as the
// efficiency gap.

#include <optional>
#include <string_view>
#include <vector>

#include "shapalloc/game.hpp"
#include "shapalloc/rational.hpp"

namespace shapalloc {

enum class AdjustMode {
  kPerCoalition,    // "eq3"
  kGrandCoalition,  // "grand"
};

std::string_view to_string(AdjustMode mode);
std::optional<AdjustMode> parse_adjust_mode(std::string_view text);

struct FactorOptions {
  // Rescale G to sum to exactly 1 before computing deviations.
  bool normalize = false;
  // Accepted |sum G - 1| when not normalizing.
  Rational tolerance{1, 100};
};

struct AdjustmentFactors {
  PlayerSet players;
  std::vector<Rational> g;
  std::vector<Rational> delta_g;  // g[i] - 1/n

  Rational sum() const;
};

/// Throws DomainError for a negative factor or a length mismatch and
/// FactorSumError when the sum is outside tolerance and normalize is off.
AdjustmentFactors compute_deltas(const PlayerSet& players, std::vector<Rational> g, const FactorOptions& options = {});

struct AdjustedAllocation {
  Allocation base;
  AdjustMode mode;
  std::vector<Rational> adjusted;
  std::vector<Rational> delta_v;  // adjusted[i] - base.payoffs[i]
  Rational efficiency_gap;        // sum adjusted - v(N)
  // individually_rational[i] is false when adjusted[i] < v({i}).
  std::vector<bool> individually_rational;
};

/// sum over coalitions S containing i of W(|S|) * v(S), for every player.
std::vector<Rational> weighted_coalition_value(const CharacteristicFunction& game);

/// Throws AlignmentError if the factors were built for other players.
AdjustedAllocation adjusted_shapley(const CharacteristicFunction& game, const AdjustmentFactors& factors,
                                    AdjustMode mode);

}  // namespace shapalloc
