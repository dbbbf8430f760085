#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ccs {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input documents and instance data.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class ValidationError : public InputError {
 public:
  explicit ValidationError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

class BadParams : public InputError {
 public:
  using InputError::InputError;
};

class BadEpsilon : public BadParams {
 public:
  using BadParams::BadParams;
};

class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

class EmptySubset : public InputError {
 public:
  using InputError::InputError;
};

/// Algorithm preconditions on the instance class.
class UnsupportedInstance : public Error {
 public:
  using Error::Error;
};

class ReleaseTimesUnsupported : public UnsupportedInstance {
 public:
  using UnsupportedInstance::UnsupportedInstance;
};

class NotFps : public UnsupportedInstance {
 public:
  using UnsupportedInstance::UnsupportedInstance;
};

class InstanceTooLarge : public UnsupportedInstance {
 public:
  using UnsupportedInstance::UnsupportedInstance;
};

class InfeasibleSchedule : public Error {
 public:
  using Error::Error;
};

/// Numerical failures inside the LP layer.
class SolverError : public Error {
 public:
  using Error::Error;
};

class SubsolverFailure : public SolverError {
 public:
  using SolverError::SolverError;
};

/// Cutting-plane loop hit its cut budget; carries the last iterate.
class IterationLimit : public SolverError {
 public:
  IterationLimit(std::string message, std::vector<double> best_completion, double best_objective)
      : SolverError(std::move(message)),
        best_completion(std::move(best_completion)),
        best_objective(best_objective) {}

  std::vector<double> best_completion;
  double best_objective;
};

}  // namespace ccs
