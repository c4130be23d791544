#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace eosvac {

// Input outside the domain of a model (Sellmeier pole, invalid parameters).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Numerical procedure failed to produce a trustworthy result.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RootFindingError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

// Carries the best available estimate so callers may still inspect it.
class QuadratureError : public ComputationError {
 public:
  QuadratureError(const std::string& what, double best_value, double best_error)
      : ComputationError(what), best_value_(best_value), best_error_(best_error) {}

  double best_value() const noexcept { return best_value_; }
  double best_error() const noexcept { return best_error_; }

 private:
  double best_value_;
  double best_error_;
};

}  // namespace eosvac

namespace eosvac {

// Invalid run configuration; one message per offending field.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const noexcept { return problems_; }

 private:
  std::vector<std::string> problems_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace eosvac
