#include "shapalloc/ahp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "shapalloc/errors.hpp"

namespace shapalloc::ahp {

ComparisonMatrix ComparisonMatrix::from_rows(std::vector<std::string> labels,
                                             const std::vector<std::vector<double>>& rows) {
  const std::size_t n = labels.size();
  if (n == 0) throw MatrixValidationError("comparison matrix must have at least one item");
  if (rows.size() != n) {
    throw MatrixValidationError("comparison matrix has " + std::to_string(rows.size()) + " rows for " +
                                std::to_string(n) + " labels");
  }
  std::vector<double> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw MatrixValidationError("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                                  " entries, expected " + std::to_string(n));
    }
    entries.insert(entries.end(), rows[i].begin(), rows[i].end());
  }
  const auto at = [&](std::size_t i, std::size_t j) { return entries[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(at(i, i) - 1.0) > kReciprocalTolerance) {
      throw MatrixValidationError("diagonal entry " + std::to_string(i) + " is not 1");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!(at(i, j) > 0.0) || !std::isfinite(at(i, j))) {
        throw MatrixValidationError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") is not a finite positive number");
      }
      if (j > i && std::abs(at(i, j) * at(j, i) - 1.0) > kReciprocalTolerance) {
        throw MatrixValidationError("entries (" + std::to_string(i) + "," + std::to_string(j) + ") and (" +
                                    std::to_string(j) + "," + std::to_string(i) + ") are not reciprocal");
      }
    }
  }
  return ComparisonMatrix(std::move(labels), std::move(entries));
}

ComparisonMatrix ComparisonMatrix::from_weights(std::vector<std::string> labels, std::span<const double> weights) {
  const std::size_t n = labels.size();
  if (weights.size() != n) throw MatrixValidationError("weights and labels differ in length");
  std::vector<std::vector<double>> rows(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = i == j ? 1.0 : weights[i] / weights[j];
  }
  return from_rows(std::move(labels), rows);
}

WeightVector make_weight_vector(std::vector<std::string> labels, std::vector<double> w) {
  if (labels.size() != w.size()) throw DomainError("weight labels and values differ in length");
  if (w.empty()) throw DomainError("weight vector must not be empty");
  double sum = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!(w[i] > 0.0) || !std::isfinite(w[i])) {
      throw DomainError("weight for '" + labels[i] + "' must be a finite positive number");
    }
    sum += w[i];
  }
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    throw DomainError("weights sum to " + std::to_string(sum) + ", expected 1");
  }
  return WeightVector{std::move(labels), std::move(w)};
}

double random_index(std::size_t n) {
  static constexpr std::array<double, 10> kTable = {0.0, 0.0, 0.58, 0.90, 1.12, 1.24, 1.32, 1.41, 1.45, 1.49};
  if (n < 1 || n > kTable.size()) {
    throw DomainError("random index is tabulated for 1 <= n <= 10 (got " + std::to_string(n) + ")");
  }
  return kTable[n - 1];
}

ConsistencyReport consistency_from_lambda(double lambda_max, std::size_t n) {
  ConsistencyReport r;
  r.lambda_max = lambda_max;
  r.ri = random_index(n);
  r.ci = n > 1 ? (lambda_max - static_cast<double>(n)) / static_cast<double>(n - 1) : 0.0;
  r.cr = n > 2 ? r.ci / r.ri : 0.0;
  r.pass = check_consistency(r);
  return r;
}

bool check_consistency(const ConsistencyReport& report) { return report.cr < kConsistencyThreshold; }

namespace {

void multiply(std::span<const double> matrix, std::size_t n, std::span<const double> x, std::span<double> out) {
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0;
    for (std::size_t j = 0; j < n; ++j) acc += matrix[i * n + j] * x[j];
    out[i] = acc;
  }
}

double rayleigh_ratio(std::span<const double> matrix, std::size_t n, std::span<const double> w) {
  std::vector<double> aw(n);
  multiply(matrix, n, w, aw);
  double acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc += aw[i] / w[i];
  return acc / static_cast<double>(n);
}

}  // namespace

Eigenpair dominant_eigenpair(std::span<const double> matrix, std::size_t n, const PowerIterationOptions& options) {
  if (n == 0 || matrix.size() != n * n) throw DomainError("matrix must be square and non-empty");

  std::vector<double> current(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n);
  for (std::size_t it = 1; it <= options.max_iterations; ++it) {
    multiply(matrix, n, current, next);
    const double total = std::accumulate(next.begin(), next.end(), 0.0);
    double change = 0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] /= total;
      change = std::max(change, std::abs(next[i] - current[i]));
    }
    current.swap(next);
    if (change < options.tolerance) {
      const double value = rayleigh_ratio(matrix, n, current);
      return Eigenpair{std::move(current), value, it};
    }
  }
  throw IterationLimitError(
      "power iteration did not converge within " + std::to_string(options.max_iterations) + " iterations",
      options.max_iterations);
}

std::optional<WeightMethod> parse_weight_method(std::string_view text) {
  if (text == "eigen" || text == "eigenvector") return WeightMethod::kEigenvector;
  if (text == "geometric" || text == "geometric-mean") return WeightMethod::kGeometricMean;
  return std::nullopt;
}

std::string_view to_string(WeightMethod method) {
  return method == WeightMethod::kEigenvector ? "eigenvector" : "geometric-mean";
}

PriorityResult principal_weights(const ComparisonMatrix& matrix, WeightMethod method,
                                 const PowerIterationOptions& options) {
  const std::size_t n = matrix.size();
  std::vector<double> w;
  double lambda = 0;
  std::size_t iterations = 0;

  if (method == WeightMethod::kEigenvector) {
    auto pair = dominant_eigenpair(matrix.entries(), n, options);
    w = std::move(pair.vector);
    lambda = pair.value;
    iterations = pair.iterations;
  } else {
    w.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      double log_sum = 0;
      for (std::size_t j = 0; j < n; ++j) log_sum += std::log(matrix.at(i, j));
      w[i] = std::exp(log_sum / static_cast<double>(n));
    }
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    for (auto& x : w) x /= total;
    lambda = rayleigh_ratio(matrix.entries(), n, w);
  }

  PriorityResult out{make_weight_vector(matrix.labels(), std::move(w)), consistency_from_lambda(lambda, n)};
  out.consistency.iterations = iterations;
  return out;
}

WeightVector synthesize_factors(const CriteriaHierarchy& hierarchy, const SynthesisOptions& options) {
  const auto& criteria = hierarchy.criteria;
  if (hierarchy.alternatives.size() != criteria.labels.size()) {
    throw DomainError("hierarchy has " + std::to_string(criteria.labels.size()) + " criteria but " +
                      std::to_string(hierarchy.alternatives.size()) + " score columns");
  }
  if (hierarchy.alternatives.empty()) throw DomainError("hierarchy has no criteria");

  if (!options.override_consistency) {
    if (hierarchy.criteria_consistency && !check_consistency(*hierarchy.criteria_consistency)) {
      throw ConsistencyGateError("criteria", hierarchy.criteria_consistency->cr);
    }
    for (const auto& alt : hierarchy.alternatives) {
      if (alt.consistency && !check_consistency(*alt.consistency)) {
        throw ConsistencyGateError(alt.criterion, alt.consistency->cr);
      }
    }
  }

  const auto& players = hierarchy.alternatives.front().scores.labels;
  std::vector<double> g(players.size(), 0.0);
  for (std::size_t k = 0; k < criteria.labels.size(); ++k) {
    const auto& alt = hierarchy.alternatives[k];
    if (alt.criterion != criteria.labels[k]) {
      throw DomainError("score column " + std::to_string(k) + " is for '" + alt.criterion + "', expected '" +
                        criteria.labels[k] + "'");
    }
    if (alt.scores.labels != players) {
      throw DomainError("score column '" + alt.criterion + "' ranks a different set of players");
    }
    for (std::size_t i = 0; i < players.size(); ++i) g[i] += criteria.w[k] * alt.scores.w[i];
  }
  return make_weight_vector(players, std::move(g));
}

}  // namespace shapalloc::ahp
