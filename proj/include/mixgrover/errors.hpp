#pragma once

#include <stdexcept>
#include <string>

namespace mixgrover {

// Invalid input: out-of-range labels, malformed files, broken invariants.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A well-formed input on which a computation has no meaningful answer.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* category() const noexcept { return "computation"; }
};

class UnsupportedSpecError : public ComputationError {
 public:
  using ComputationError::ComputationError;
  const char* category() const noexcept override { return "unsupported-spec"; }
};

class UselessInitialStateError : public ComputationError {
 public:
  using ComputationError::ComputationError;
  const char* category() const noexcept override { return "useless-initial-state"; }
};

class NoOscillationError : public ComputationError {
 public:
  using ComputationError::ComputationError;
  const char* category() const noexcept override { return "no-oscillation"; }
};

}  // namespace mixgrover
