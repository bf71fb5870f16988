#include "shapalloc/adjust.hpp"

#include <numeric>

#include "shapalloc/errors.hpp"

namespace shapalloc {

std::string_view to_string(AdjustMode mode) {
  switch (mode) {
    case AdjustMode::kPerCoalition:
      return "eq3";
    case AdjustMode::kGrandCoalition:
      return "grand";
  }
  return "?";
}

std::optional<AdjustMode> parse_adjust_mode(std::string_view text) {
  if (text == "eq3") return AdjustMode::kPerCoalition;
  if (text == "grand") return AdjustMode::kGrandCoalition;
  return std::nullopt;
}

Rational AdjustmentFactors::sum() const { return std::accumulate(g.begin(), g.end(), Rational(0)); }

AdjustmentFactors compute_deltas(const PlayerSet& players, std::vector<Rational> g, const FactorOptions& options) {
  const std::size_t n = players.size();
  if (g.size() != n) {
    throw DomainError("expected " + std::to_string(n) + " adjustment factors, got " + std::to_string(g.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (g[i] < 0) throw DomainError("adjustment factor for '" + players[i] + "' is negative");
  }
  const Rational total = std::accumulate(g.begin(), g.end(), Rational(0));
  if (options.normalize) {
    if (total == 0) throw DomainError("cannot normalize adjustment factors that sum to zero");
    for (auto& x : g) x /= total;
  } else if (abs(total - 1) > options.tolerance) {
    throw FactorSumError("adjustment factors sum to " + to_fixed(total, 6) + ", outside 1 +/- " +
                             to_exact_string(options.tolerance),
                         to_double(total));
  }

  const Rational uniform(1, static_cast<long>(n));
  std::vector<Rational> delta(n);
  for (std::size_t i = 0; i < n; ++i) delta[i] = g[i] - uniform;
  return AdjustmentFactors{players, std::move(g), std::move(delta)};
}

std::vector<Rational> weighted_coalition_value(const CharacteristicFunction& game) {
  const std::size_t n = game.size();
  std::vector<Rational> weights(n + 1);
  for (std::size_t s = 1; s <= n; ++s) weights[s] = coalition_weight(n, s);

  std::vector<Rational> out(n);
  const std::uint64_t count = std::uint64_t{1} << n;
  Rational term;
  for (std::uint64_t m = 1; m < count; ++m) {
    const Coalition s(m);
    term = weights[s.size()] * game.value(s);
    for (const auto i : s.members()) out[i] += term;
  }
  return out;
}

AdjustedAllocation adjusted_shapley(const CharacteristicFunction& game, const AdjustmentFactors& factors,
                                    AdjustMode mode) {
  if (!(factors.players == game.players())) {
    throw AlignmentError("adjustment factors are not aligned with the game's player set");
  }
  const std::size_t n = game.size();

  AdjustedAllocation out{shapley_exact(game), mode, {}, {}, {}, {}};
  out.adjusted.resize(n);

  switch (mode) {
    case AdjustMode::kPerCoalition: {
      // Literal summation: every coalition term carries its own v(S) * dG_i.
      for (std::size_t i = 0; i < n; ++i) {
        Rational total;
        for (const auto& term : out.base.terms[i]) {
          total += term.weight * (term.marginal + game.value(term.coalition) * factors.delta_g[i]);
        }
        out.adjusted[i] = total;
      }
      break;
    }
    case AdjustMode::kGrandCoalition:
      for (std::size_t i = 0; i < n; ++i) {
        out.adjusted[i] = out.base.payoffs[i] + game.grand_value() * factors.delta_g[i];
      }
      break;
  }

  out.delta_v.resize(n);
  out.individually_rational.resize(n);
  Rational total;
  for (std::size_t i = 0; i < n; ++i) {
    out.delta_v[i] = out.adjusted[i] - out.base.payoffs[i];
    out.individually_rational[i] = out.adjusted[i] >= game.value(Coalition::singleton(i));
    total += out.adjusted[i];
  }
  out.efficiency_gap = total - game.grand_value();
  return out;
}

}  // namespace shapalloc
