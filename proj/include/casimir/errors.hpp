#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace casimir {

/// An input lies outside the domain of a formula (non-finite result,
/// violated geometric assumption, ...). The message names the input.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The cavity sits at or inside the Schwarzschild radius of the source.
class HorizonError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A numerical procedure did not reach its target accuracy. Carries the
/// procedure's diagnostics as free-form lines.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::vector<std::string> diagnostics)
      : std::runtime_error(what), diagnostics_(std::move(diagnostics)) {}

  const std::vector<std::string>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<std::string> diagnostics_;
};

/// One or more configuration problems, all collected before throwing.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(std::vector<std::string> problems)
      : std::invalid_argument(join(problems)), problems_(std::move(problems)) {}

  const std::vector<std::string>& problems() const noexcept { return problems_; }

 private:
  static std::string join(const std::vector<std::string>& problems) {
    std::string out = "invalid configuration:";
    for (const auto& p : problems) {
      out += "\n  - ";
      out += p;
    }
    return out;
  }

  std::vector<std::string> problems_;
};

/// The design optimizer found no admissible point.
class InfeasibleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace casimir
