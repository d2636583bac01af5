#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace nilgen {

/// Input violates an operation's precondition (wrong modulus, bad shape, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An internal invariant failed. These indicate bugs, never expected outcomes.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A table violates the Jacobi identity; carries the offending basis triple (0-based).
class JacobiFailure : public std::runtime_error {
 public:
  JacobiFailure(const std::string& what, std::array<int, 3> triple)
      : std::runtime_error(what), triple_(triple) {}
  std::array<int, 3> triple() const { return triple_; }

 private:
  std::array<int, 3> triple_;
};

class NotNilpotent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration job is larger than the configured ceiling.
class CeilingExceeded : public std::runtime_error {
 public:
  CeilingExceeded(const std::string& what, std::string job)
      : std::runtime_error(what), job_(std::move(job)) {}
  const std::string& job() const { return job_; }

 private:
  std::string job_;
};

/// Malformed input file; `field` names the offending location.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::string field)
      : std::runtime_error(what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace nilgen
