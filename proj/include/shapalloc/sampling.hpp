#pragma once

// Monte Carlo estimation of Shapley values by uniform permutation sampling.
//
// Permutations are drawn in fixed-size chunks. Chunk c owns its own
// generator, seeded from (seed, c), and chunk results are merged in chunk
// order, so the report depends only on (oracle, players, plan) and not on
// how many workers ran the chunks.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "shapalloc/game.hpp"
#include "shapalloc/rational.hpp"

namespace shapalloc {

struct SamplingPlan {
  std::uint64_t permutations = 0;
  std::uint64_t seed = 0;
  std::uint64_t chunk_size = 4096;
};

/// Must be pure and safe to call concurrently. Sees coalitions over up to
/// kMaxPlayers players.
using CoalitionOracle = std::function<Rational(Coalition)>;

struct EstimateReport {
  PlayerSet players;
  // Exact sample means. Marginals along one permutation telescope to v(N),
  // so these always sum to v(N) exactly.
  std::vector<Rational> estimates;
  std::vector<double> std_error;  // standard error of each mean
  std::uint64_t samples = 0;
  std::string generator;
};

/// Name and version of the per-chunk generator recorded in every report.
inline constexpr const char* kSamplerGenerator = "mt19937_64 seeded by splitmix64(seed, chunk) v1";

/// Throws PlanError for an empty plan or zero chunk size and OracleError
/// (with the global permutation index) when the oracle throws. `workers` of 0
/// is treated as 1.
EstimateReport sample_shapley(const CoalitionOracle& oracle, const PlayerSet& players, const SamplingPlan& plan,
                              unsigned workers = 1);

/// Convenience oracle over a tabulated game.
CoalitionOracle table_oracle(const CharacteristicFunction& game);

}  // namespace shapalloc
