#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "shapalloc/ahp.hpp"
#include "shapalloc/errors.hpp"

using namespace shapalloc;
using namespace shapalloc::ahp;

namespace {

std::vector<std::string> labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

std::vector<double> random_weights(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> draw(0.05, 1.0);
  std::vector<double> w(n);
  double total = 0;
  for (auto& x : w) total += (x = draw(rng));
  for (auto& x : w) x /= total;
  return w;
}

// Consistent matrix with every upper entry multiplied by a random factor in
// [1/spread, spread]; reciprocity is kept.
std::vector<std::vector<double>> perturbed(std::mt19937_64& rng, const std::vector<double>& w, double spread) {
  const std::size_t n = w.size();
  std::uniform_real_distribution<double> log_factor(-std::log(spread), std::log(spread));
  std::vector<std::vector<double>> rows(n, std::vector<double>(n, 1.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      rows[i][j] = w[i] / w[j] * std::exp(log_factor(rng));
      rows[j][i] = 1.0 / rows[i][j];
    }
  }
  return rows;
}

}  // namespace

TEST_CASE("random index table") {
  const std::vector<double> expected{0, 0, 0.58, 0.90, 1.12, 1.24, 1.32, 1.41, 1.45, 1.49};
  for (std::size_t n = 1; n <= 10; ++n) CHECK(random_index(n) == expected[n - 1]);
  CHECK_THROWS_AS(random_index(0), DomainError);
  CHECK_THROWS_AS(random_index(11), DomainError);
}

TEST_CASE("consistency numbers from a given lambda_max") {
  const auto r = consistency_from_lambda(7.5838, 7);
  CHECK(std::abs(r.ci - 0.0973) < 1e-4);
  CHECK(r.ri == 1.32);
  CHECK(std::abs(r.cr - 0.0737) < 1e-4);
  CHECK(std::abs(r.cr - 0.073) < 0.005);
  CHECK(r.pass);

  const auto two = consistency_from_lambda(2.0000001, 2);
  CHECK(two.cr == 0);
  CHECK(two.pass);
}

TEST_CASE("check_consistency is a strict inequality") {
  ConsistencyReport r;
  r.cr = 0.073;
  CHECK(check_consistency(r));
  r.cr = 0.1;
  CHECK_FALSE(check_consistency(r));
  r.cr = 0.0999999;
  CHECK(check_consistency(r));
}

TEST_CASE("consistent matrices recover their weights") {
  const std::vector<double> w{0.5, 0.3, 0.2};
  const auto m = ComparisonMatrix::from_weights(labels(3), w);
  for (const auto method : {WeightMethod::kEigenvector, WeightMethod::kGeometricMean}) {
    const auto result = principal_weights(m, method);
    for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(result.weights.w[i] - w[i]) < 1e-9);
    CHECK(std::abs(result.consistency.lambda_max - 3.0) < 1e-9);
    CHECK(std::abs(result.consistency.cr) < 1e-9);
    CHECK(result.consistency.pass);
  }
}

TEST_CASE("all-equal judgments give uniform weights") {
  const auto m = ComparisonMatrix::from_rows(labels(3), {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  const auto result = principal_weights(m);
  for (const auto x : result.weights.w) CHECK(x == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(result.consistency.lambda_max == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(std::abs(result.consistency.ci) < 1e-12);
}

TEST_CASE("two-item matrices always pass") {
  const auto m = ComparisonMatrix::from_rows(labels(2), {{1, 7}, {1.0 / 7.0, 1}});
  const auto result = principal_weights(m);
  CHECK(result.consistency.cr == 0);
  CHECK(result.consistency.pass);
  CHECK(result.weights.w[0] == doctest::Approx(7.0 / 8.0));
}

TEST_CASE("matrix validation") {
  CHECK_THROWS_AS(ComparisonMatrix::from_rows(labels(2), {{1, 2}, {0.4, 1}}), MatrixValidationError);
  CHECK_THROWS_AS(ComparisonMatrix::from_rows(labels(2), {{1, -2}, {-0.5, 1}}), MatrixValidationError);
  CHECK_THROWS_AS(ComparisonMatrix::from_rows(labels(2), {{2, 2}, {0.5, 1}}), MatrixValidationError);
  CHECK_THROWS_AS(ComparisonMatrix::from_rows(labels(2), {{1, 2}}), MatrixValidationError);
  CHECK_THROWS_AS(ComparisonMatrix::from_rows(labels(2), {{1, 2}, {0.5}}), MatrixValidationError);
  CHECK_THROWS_AS(ComparisonMatrix::from_rows({}, {}), MatrixValidationError);
}

TEST_CASE("power iteration gives up after the iteration cap") {
  std::mt19937_64 rng(8);
  const auto rows = perturbed(rng, random_weights(rng, 5), 3.0);
  const auto m = ComparisonMatrix::from_rows(labels(5), rows);
  PowerIterationOptions tight;
  tight.max_iterations = 1;
  try {
    principal_weights(m, WeightMethod::kEigenvector, tight);
    FAIL("expected IterationLimitError");
  } catch (const IterationLimitError& e) {
    CHECK(e.iterations() == 1);
  }
}

TEST_CASE("property: weights are invariant under positive scaling of the matrix") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> scale(0.1, 10.0);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 3 + trial % 6;
    const auto rows = perturbed(rng, random_weights(rng, n), trial % 2 ? 1.0 + 1e-12 : 2.5);
    std::vector<double> flat;
    for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
    const double c = scale(rng);
    std::vector<double> scaled = flat;
    for (auto& x : scaled) x *= c;

    const auto base = dominant_eigenpair(flat, n);
    const auto other = dominant_eigenpair(scaled, n);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(base.vector[i] - other.vector[i]) < 1e-9);
    CHECK(other.value == doctest::Approx(c * base.value).epsilon(1e-9));
  }
}

TEST_CASE("property: lambda_max >= n and the geometric mean tracks the eigenvector on consistent input") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 9;
    const auto w = random_weights(rng, n);

    const auto noisy = principal_weights(ComparisonMatrix::from_rows(labels(n), perturbed(rng, w, 4.0)));
    CHECK(noisy.consistency.lambda_max >= static_cast<double>(n) - 1e-9);
    double total = 0;
    for (const auto x : noisy.weights.w) total += x;
    CHECK(std::abs(total - 1.0) < 1e-9);

    const auto consistent = ComparisonMatrix::from_weights(labels(n), w);
    const auto eig = principal_weights(consistent, WeightMethod::kEigenvector);
    const auto geo = principal_weights(consistent, WeightMethod::kGeometricMean);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(eig.weights.w[i] - geo.weights.w[i]) < 1e-6);
    CHECK(std::abs(eig.consistency.lambda_max - static_cast<double>(n)) < 1e-9);
    CHECK(std::abs(eig.consistency.cr) < 1e-9);
  }
}

TEST_CASE("reconstructed criteria matrix reproduces the published weights") {
  const auto m = ComparisonMatrix::from_rows(fixtures::criteria_labels(), fixtures::reconstructed_criteria_matrix());
  const auto result = principal_weights(m);
  const auto& published = fixtures::kPublishedCriteriaWeights;
  for (std::size_t k = 0; k < published.size(); ++k) {
    CAPTURE(k);
    CHECK(std::abs(result.weights.w[k] - published[k]) < 0.02);
  }
  CHECK(result.consistency.pass);
}

TEST_CASE("synthesize_factors") {
  SUBCASE("single criterion collapses to the score column") {
    CriteriaHierarchy h{make_weight_vector({"R"}, {1.0}), std::nullopt,
                        {{"R", make_weight_vector({"A", "B", "C"}, {0.6, 0.3, 0.1}), std::nullopt}}};
    const auto g = synthesize_factors(h);
    CHECK(g.labels == std::vector<std::string>{"A", "B", "C"});
    CHECK(g.w[0] == doctest::Approx(0.6));
    CHECK(g.w[1] == doctest::Approx(0.3));
    CHECK(g.w[2] == doctest::Approx(0.1));
  }
  SUBCASE("equal score columns under the published weights") {
    // The published criteria weights sum to 1.0001; rescale them first.
    std::vector<double> w(fixtures::kPublishedCriteriaWeights.begin(), fixtures::kPublishedCriteriaWeights.end());
    double total = 0;
    for (const auto x : w) total += x;
    for (auto& x : w) x /= total;
    const std::vector<double> column{0.6648 / 0.9984, 0.2633 / 0.9984, 0.0703 / 0.9984};
    CriteriaHierarchy h{make_weight_vector(fixtures::criteria_labels(), w), std::nullopt, {}};
    for (const auto& label : fixtures::criteria_labels()) {
      h.alternatives.push_back({label, make_weight_vector({"A", "B", "C"}, column), std::nullopt});
    }
    const auto g = synthesize_factors(h);
    double sum = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      // Oracle: the weighted sum written out term by term.
      double expected = 0;
      for (std::size_t k = 0; k < w.size(); ++k) expected += w[k] * column[i];
      CHECK(std::abs(g.w[i] - expected) < 1e-12);
      CHECK(std::abs(g.w[i] - column[i]) < 1e-9);
      sum += g.w[i];
    }
    CHECK(std::abs(sum - 1.0) < 1e-9);
  }
  SUBCASE("uniform scores stay uniform") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t criteria = 1 + trial % 7;
      const std::size_t players = 2 + trial % 4;
      CriteriaHierarchy h{make_weight_vector(labels(criteria), random_weights(rng, criteria)), std::nullopt, {}};
      for (std::size_t k = 0; k < criteria; ++k) {
        h.alternatives.push_back({"x" + std::to_string(k),
                                  make_weight_vector(labels(players), std::vector<double>(players, 1.0 / players)),
                                  std::nullopt});
      }
      for (const auto x : synthesize_factors(h).w) CHECK(x == doctest::Approx(1.0 / players).epsilon(1e-12));
    }
  }
}

TEST_CASE("synthesis enforces the consistency gate") {
  ConsistencyReport bad = consistency_from_lambda(3.5, 3);
  REQUIRE_FALSE(bad.pass);
  CriteriaHierarchy h{make_weight_vector({"R1", "R2"}, {0.5, 0.5}), consistency_from_lambda(2.0, 2),
                      {{"R1", make_weight_vector({"A", "B"}, {0.5, 0.5}), std::nullopt},
                       {"R2", make_weight_vector({"A", "B"}, {0.7, 0.3}), bad}}};
  try {
    synthesize_factors(h);
    FAIL("expected ConsistencyGateError");
  } catch (const ConsistencyGateError& e) {
    CHECK(e.criterion() == "R2");
    CHECK(e.cr() == doctest::Approx(bad.cr));
  }
  const auto g = synthesize_factors(h, {true});
  CHECK(g.w[0] == doctest::Approx(0.6));

  h.criteria_consistency = bad;
  CHECK_THROWS_WITH_AS(synthesize_factors(h), doctest::Contains("'criteria'"), ConsistencyGateError);
}

TEST_CASE("synthesis rejects misaligned levels") {
  CriteriaHierarchy h{make_weight_vector({"R1", "R2"}, {0.5, 0.5}), std::nullopt,
                      {{"R1", make_weight_vector({"A", "B"}, {0.5, 0.5}), std::nullopt},
                       {"R3", make_weight_vector({"A", "B"}, {0.5, 0.5}), std::nullopt}}};
  CHECK_THROWS_AS(synthesize_factors(h), DomainError);
  h.alternatives[1].criterion = "R2";
  h.alternatives[1].scores = make_weight_vector({"A", "C"}, {0.5, 0.5});
  CHECK_THROWS_AS(synthesize_factors(h), DomainError);
  h.alternatives.pop_back();
  CHECK_THROWS_AS(synthesize_factors(h), DomainError);
}

TEST_CASE("weight vectors must be positive and normalized") {
  CHECK_THROWS_AS(make_weight_vector({"a", "b"}, {0.5, 0.6}), DomainError);
  CHECK_THROWS_AS(make_weight_vector({"a", "b"}, {1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(make_weight_vector({"a"}, {0.5, 0.5}), DomainError);
}

TEST_CASE("criteria catalog") {
  CHECK(kInnovationCriteria.size() == 7);
  CHECK(kInnovationCriteria[1] == "Design Capability");
}
