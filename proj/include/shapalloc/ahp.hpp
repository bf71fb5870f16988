#pragma once

// Analytic hierarchy process: priority weights from reciprocal pairwise
// comparison matrices, the consistency-ratio gate, and synthesis of
// per-player factors from a criteria/alternatives hierarchy.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace shapalloc::ahp {

/// Criteria catalog for technological innovation capability: five
/// autonomous-innovation factors followed by two cooperative-innovation
/// factors.
inline constexpr std::array<std::string_view, 7> kInnovationCriteria = {
    "Technological Innovation Investment Capacity",
    "Design Capability",
    "Production Capability",
    "Technological Industrialization Capability",
    "Technological Innovation Output Capability",
    "Technological Cooperation Capability",
    "University-Industry-Research Collaboration Capability",
};

inline constexpr double kReciprocalTolerance = 1e-9;
inline constexpr double kWeightSumTolerance = 1e-9;
inline constexpr double kConsistencyThreshold = 0.1;

/// Positive reciprocal judgment matrix, stored row-major.
class ComparisonMatrix {
 public:
  /// Throws MatrixValidationError unless the rows form a square matrix with
  /// unit diagonal, strictly positive entries and a[i][j] * a[j][i] = 1.
  static ComparisonMatrix from_rows(std::vector<std::string> labels, const std::vector<std::vector<double>>& rows);

  /// The perfectly consistent matrix a[i][j] = w_i / w_j.
  static ComparisonMatrix from_weights(std::vector<std::string> labels, std::span<const double> weights);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  double at(std::size_t i, std::size_t j) const { return entries_[i * size() + j]; }
  std::span<const double> entries() const noexcept { return entries_; }

 private:
  ComparisonMatrix(std::vector<std::string> labels, std::vector<double> entries)
      : labels_(std::move(labels)), entries_(std::move(entries)) {}

  std::vector<std::string> labels_;
  std::vector<double> entries_;
};

struct WeightVector {
  std::vector<std::string> labels;
  std::vector<double> w;
};

/// Throws DomainError unless labels and weights align, every weight is
/// positive and the weights sum to 1 within kWeightSumTolerance.
WeightVector make_weight_vector(std::vector<std::string> labels, std::vector<double> w);

struct ConsistencyReport {
  double lambda_max = 0;
  double ci = 0;  // (lambda_max - n) / (n - 1)
  double ri = 0;  // random index for n
  double cr = 0;  // ci / ri, defined as 0 for n <= 2
  bool pass = true;
  std::size_t iterations = 0;  // power iterations spent, 0 for closed forms
};

/// Saaty's random consistency index for n in [1, 10]; DomainError otherwise.
double random_index(std::size_t n);

ConsistencyReport consistency_from_lambda(double lambda_max, std::size_t n);

/// cr < kConsistencyThreshold. The inequality is strict.
bool check_consistency(const ConsistencyReport& report);

struct PowerIterationOptions {
  double tolerance = 1e-12;  // on the max-norm change between iterates
  std::size_t max_iterations = 10'000;
};

struct Eigenpair {
  std::vector<double> vector;  // positive, sums to 1
  double value = 0;            // mean of (A v)_i / v_i
  std::size_t iterations = 0;
};

/// Power iteration for the Perron pair of an n x n positive matrix (row-major).
/// Throws IterationLimitError when the tolerance is not met in time.
Eigenpair dominant_eigenpair(std::span<const double> matrix, std::size_t n, const PowerIterationOptions& options = {});

enum class WeightMethod {
  kEigenvector,
  kGeometricMean,  // normalized row geometric means
};

std::optional<WeightMethod> parse_weight_method(std::string_view text);
std::string_view to_string(WeightMethod method);

struct PriorityResult {
  WeightVector weights;
  ConsistencyReport consistency;
};

PriorityResult principal_weights(const ComparisonMatrix& matrix, WeightMethod method = WeightMethod::kEigenvector,
                                 const PowerIterationOptions& options = {});

/// Scores of every player under one criterion.
struct CriterionScores {
  std::string criterion;
  WeightVector scores;
  // Present when the scores came from a comparison matrix.
  std::optional<ConsistencyReport> consistency;
};

struct CriteriaHierarchy {
  WeightVector criteria;
  std::optional<ConsistencyReport> criteria_consistency;
  std::vector<CriterionScores> alternatives;  // one per criterion, same order
};

struct SynthesisOptions {
  bool override_consistency = false;
};

/// G_i = sum_k criteria.w[k] * alternatives[k].scores.w[i]. Throws
/// ConsistencyGateError for the first failing matrix (the criteria matrix is
/// reported as "criteria") unless overridden, and DomainError when labels do
/// not line up across levels.
WeightVector synthesize_factors(const CriteriaHierarchy& hierarchy, const SynthesisOptions& options = {});

}  // namespace shapalloc::ahp
