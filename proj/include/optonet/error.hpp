#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace optonet {

/// An argument lies outside the domain of a formula.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A request has no finite solution (e.g. certain detection).
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was applied to the wrong variant (e.g. loop-only on an analog cell).
class KindError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Fatal simulator diagnostic; carries the tail of the processed-event trace.
class SimulationError : public std::runtime_error {
 public:
  SimulationError(const std::string& what, std::vector<std::string> trace_tail)
      : std::runtime_error(what), trace_tail_(std::move(trace_tail)) {}

  [[nodiscard]] const std::vector<std::string>& trace_tail() const { return trace_tail_; }

 private:
  std::vector<std::string> trace_tail_;
};

/// A synaptic memory ran out of write endurance under the "fault" policy.
class EnduranceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Scenario/config validation failed; lists every violated constraint.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> problems);

  [[nodiscard]] const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

/// Bad command-line usage (unknown formula, missing parameter).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace optonet
