#pragma once

#include <stdexcept>
#include <string>

namespace ductwave {

/// Input outside the contract of an operation (bad coordinate, bad config value).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation requested on the branch cut; caller should use the boundary-value path.
class CutEvaluationError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Evaluation at (or too close to) a pole of the norming factor.
class AtPoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Operation not available for this profile class.
class UnsupportedClassError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Requested resolution/oscillation budget exceeded; message carries the needed setting.
class ResolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched grids or missing spectrum pieces between cooperating modules.
class ContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Solve refused because the profile is not certified stable.
class InstabilityRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad run configuration; `field` holds the offending field path.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace ductwave
