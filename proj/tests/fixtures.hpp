#pragma once

// Shared test fixtures for the innovation-capability criteria hierarchy.

#include <array>
#include <string>
#include <vector>

namespace fixtures {

// Published criteria weights R1..R7 (rounded to 4 places; they sum to 1.0001).
inline constexpr std::array<double, 7> kPublishedCriteriaWeights = {0.4182, 0.2401, 0.1218, 0.1030,
                                                                    0.0442, 0.0351, 0.0377};

inline std::vector<std::string> criteria_labels() { return {"R1", "R2", "R3", "R4", "R5", "R6", "R7"}; }

// Only the weights and lambda_max were published, not the judgments. This
// matrix is reconstructed: each a[i][j] is the Saaty value (1..9 or its
// reciprocal) nearest to w_i / w_j in log scale. Its principal eigenvector is
// within 0.02 of every published weight; its lambda_max (about 7.036) is not
// the published 7.5838.
inline std::vector<std::vector<double>> reconstructed_criteria_matrix() {
  return {
      {1, 2, 3, 4, 9, 9, 9},
      {1.0 / 2, 1, 2, 2, 5, 7, 6},
      {1.0 / 3, 1.0 / 2, 1, 1, 3, 4, 3},
      {1.0 / 4, 1.0 / 2, 1, 1, 2, 3, 3},
      {1.0 / 9, 1.0 / 5, 1.0 / 3, 1.0 / 2, 1, 1, 1},
      {1.0 / 9, 1.0 / 7, 1.0 / 4, 1.0 / 3, 1, 1, 1},
      {1.0 / 9, 1.0 / 6, 1.0 / 3, 1.0 / 3, 1, 1, 1},
  };
}

}  // namespace fixtures
