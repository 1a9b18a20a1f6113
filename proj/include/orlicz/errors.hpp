#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace orlicz {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Argument outside the mathematical domain of an operation (e.g. t < 0).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed or inconsistent argument (kind mismatch, empty grid, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A hypothesis the operation depends on does not hold for the input.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A user-supplied function produced a non-finite value where one was required.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ratio or quotient whose denominator vanished.
class DegenerateInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A null set of the target space was pulled back to a set of positive measure.
class NonsingularityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two routes for the same quantity disagree about finiteness.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Configuration document could not be turned into a valid run.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& path, const std::string& message)
      : std::runtime_error(path.empty() ? message : path + ": " + message), path_(path) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace orlicz
