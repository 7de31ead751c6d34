#pragma once

#include <stdexcept>
#include <string>

namespace rowcov {

// Base error carrying a stable machine-readable kind string, used by the
// CLI to build error JSON and exit codes.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// Malformed numeric input (zero/non-finite matrices, non-unit directions).
class InvalidInputError : public Error {
 public:
  explicit InvalidInputError(const std::string& msg)
      : Error("invalid_input", msg) {}
};

// Rank-deficient or dimensionally impossible design matrix.
class InvalidDesignError : public Error {
 public:
  explicit InvalidDesignError(const std::string& msg)
      : Error("invalid_design", msg) {}
};

// Covariance factor that is not positive definite.
class InvalidCovarianceError : public Error {
 public:
  explicit InvalidCovarianceError(const std::string& msg)
      : Error("invalid_covariance", msg) {}
};

// The spike direction lies in the design column space: the alternative is
// undetectable by any residual-invariant test, so this is a hard error.
class ConfoundedDirectionError : public Error {
 public:
  explicit ConfoundedDirectionError(const std::string& msg)
      : Error("confounded_direction", msg) {}
};

// n_eff <= p_eff: every invariant statistic is constant and no invariant
// test has power above its level.
class TrivialRegimeError : public Error {
 public:
  explicit TrivialRegimeError(const std::string& msg)
      : Error("trivial_regime", msg) {}
};

class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& msg)
      : Error("numerical_failure", msg) {}
};

}  // namespace rowcov
