#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace shapalloc {

// Every exception thrown by the library derives from Error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A characteristic function lacks the value of some non-empty coalition.
class IncompleteGameError : public Error {
 public:
  IncompleteGameError(std::string coalition)
      : Error("incomplete game: no value for coalition " + coalition),
        coalition_(std::move(coalition)) {}
  const std::string& coalition() const noexcept { return coalition_; }

 private:
  std::string coalition_;
};

class EnumerationBoundError : public Error {
 public:
  using Error::Error;
};

class FactorSumError : public Error {
 public:
  FactorSumError(std::string message, double sum)
      : Error(std::move(message)), sum_(sum) {}
  double sum() const noexcept { return sum_; }

 private:
  double sum_;
};

// Adjustment factors and game are defined over different player sets.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

// A comparison matrix is not a positive reciprocal matrix.
class MatrixValidationError : public Error {
 public:
  using Error::Error;
};

class IterationLimitError : public Error {
 public:
  IterationLimitError(std::string message, std::size_t iterations)
      : Error(std::move(message)), iterations_(iterations) {}
  std::size_t iterations() const noexcept { return iterations_; }

 private:
  std::size_t iterations_;
};

class ConsistencyGateError : public Error {
 public:
  ConsistencyGateError(std::string criterion, double cr)
      : Error("consistency gate failed for '" + criterion +
              "': CR = " + std::to_string(cr) + " (must be < 0.1)"),
        criterion_(std::move(criterion)),
        cr_(cr) {}
  const std::string& criterion() const noexcept { return criterion_; }
  double cr() const noexcept { return cr_; }

 private:
  std::string criterion_;
  double cr_;
};

class PlanError : public Error {
 public:
  using Error::Error;
};

// Raised when the coalition oracle throws while sampling; carries the index
// of the permutation being evaluated.
class OracleError : public Error {
 public:
  OracleError(std::uint64_t permutation, const std::string& what)
      : Error("coalition oracle failed at permutation " +
              std::to_string(permutation) + ": " + what),
        permutation_(permutation) {}
  std::uint64_t permutation() const noexcept { return permutation_; }

 private:
  std::uint64_t permutation_;
};

// Malformed scenario document. `locus` is a JSON pointer to the offending
// field, or "line L, column C" for syntax errors.
class ScenarioError : public Error {
 public:
  ScenarioError(std::string locus, const std::string& message)
      : Error(locus + ": " + message), locus_(std::move(locus)) {}
  const std::string& locus() const noexcept { return locus_; }

 private:
  std::string locus_;
};

}  // namespace shapalloc
