#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dk {

enum class ErrorCode {
  ComplexNotClosed,
  InvalidInput,
  UnknownBuiltin,
  TypeMismatch,
  PreconditionDefectTooLow,
  DegreeBoundExceeded,
  NoIntegration,
  WrongTopDegree,
  WrongLieAlgebra,
  IndexOutOfRange,
  ComposeMismatch,
  InvalidDiagram,
  MissingPullback,
  NotDisjointPoset,
  BudgetExceeded,
  ParseError,
  ValidationError,
};

/// Stable upper-case name used in reports, e.g. "COMPLEX_NOT_CLOSED".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// One failed axiom instance. `indices` are basis indices (or other
/// positional witnesses) in the order the axiom was stated.
struct Violation {
  std::string kind;
  std::vector<int> indices;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Report-style validator output: empty means valid.
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  void add(std::string kind, std::vector<int> indices, std::string detail = {}) {
    violations.push_back({std::move(kind), std::move(indices), std::move(detail)});
  }
  void append(const ValidationReport& other, const std::string& prefix = {}) {
    for (auto v : other.violations) {
      if (!prefix.empty()) v.kind = prefix + v.kind;
      violations.push_back(std::move(v));
    }
  }
  std::string summary(std::size_t max_items = 5) const;
};

/// Thrown when an input fails its owning module's validator.
class ValidationFailure : public Error {
 public:
  ValidationFailure(std::string what_failed, ValidationReport report)
      : Error(ErrorCode::ValidationError, what_failed + ": " + report.summary()),
        subject_(std::move(what_failed)),
        report_(std::move(report)) {}

  const std::string& subject() const noexcept { return subject_; }
  const ValidationReport& report() const noexcept { return report_; }

 private:
  std::string subject_;
  ValidationReport report_;
};

}  // namespace dk
