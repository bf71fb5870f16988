#pragma once

// Scenario documents: a JSON description of a coalition game plus optional
// adjustment factors or an AHP hierarchy that produces them.
//
//   {
//     "players": ["A", "B", "C"],
//     "coalitions": [{"members": ["A"], "value": "1000"}, ...],
//     "factors": {"A": "0.6648", "B": "0.2633", "C": "0.0703"},
//     "ahp": {
//       "criteria": ["R1", "R2"],
//       "criteria_matrix": [["1", "3"], ["1/3", "1"]],
//       "alternatives": {
//         "R1": {"matrix": [["1", "2", "4"], ["1/2", "1", "2"], ["1/4", "1/2", "1"]]},
//         "R2": {"scores": {"A": "0.5", "B": "0.3", "C": "0.2"}}
//       }
//     },
//     "mode": "eq3",
//     "normalize_factors": false
//   }
//
// Numbers are strings holding exact decimals ("0.6648") or fractions
// ("1/3"); plain JSON integers are also accepted.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "shapalloc/adjust.hpp"
#include "shapalloc/ahp.hpp"
#include "shapalloc/game.hpp"
#include "shapalloc/rational.hpp"

namespace shapalloc {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct CoalitionValue {
  std::vector<std::string> members;  // in player order
  Rational value;

  bool operator==(const CoalitionValue&) const = default;
};

struct DirectScores {
  std::vector<Rational> scores;  // aligned with the scenario's players

  bool operator==(const DirectScores&) const = default;
};

struct AhpSpec {
  std::vector<std::string> criteria;
  RationalMatrix criteria_matrix;
  // One entry per criterion, in criteria order: a pairwise matrix over the
  // players or direct normalized scores.
  std::vector<std::variant<RationalMatrix, DirectScores>> alternatives;

  bool operator==(const AhpSpec&) const = default;
};

struct ScenarioFile {
  std::vector<std::string> players;
  std::vector<CoalitionValue> coalitions;  // sorted by coalition mask
  std::optional<std::vector<Rational>> factors;  // aligned with players
  std::optional<AhpSpec> ahp;
  std::optional<AdjustMode> mode;
  std::optional<bool> normalize_factors;

  bool operator==(const ScenarioFile&) const = default;
};

/// Throws ScenarioError carrying a JSON pointer (or line/column) locus.
ScenarioFile parse_scenario(std::string_view text);
ScenarioFile load_scenario(const std::filesystem::path& path);

/// Canonical JSON text; parse_scenario(serialize_scenario(s)) == s.
std::string serialize_scenario(const ScenarioFile& scenario);

PlayerSet player_set(const ScenarioFile& scenario);
Coalition coalition_of(const CoalitionValue& entry, const PlayerSet& players);

/// The characteristic function; IncompleteGameError if a coalition is missing.
CharacteristicFunction build_game(const ScenarioFile& scenario);

/// Weights and consistency of every comparison matrix in the AHP block.
ahp::CriteriaHierarchy build_hierarchy(const ScenarioFile& scenario,
                                       ahp::WeightMethod method = ahp::WeightMethod::kEigenvector);

}  // namespace shapalloc
