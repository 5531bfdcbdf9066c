#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace morphcoh {

/// Categories of failure raised by the library. The CLI maps each one to a
/// stable exit code.
enum class ErrorKind {
  Shape,
  Parse,
  Validation,
  UnknownObject,
  SubspaceViolation,
  RotaBaxterViolation,
  NotAHomomorphism,
  NotASubalgebra,
  NotPreserved,
  NotACocycle,
  NotASection,
  NotSimplyCohomologous,
  SizeCeiling,
  Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Outcome of an axiom check over basis data: `ok` or the first violation.
struct CheckReport {
  bool ok = true;
  std::string violation;

  static CheckReport pass() { return {}; }
  static CheckReport fail(std::string what) { return {false, std::move(what)}; }

  explicit operator bool() const noexcept { return ok; }
};

/// Throws `Error(kind, context + ": " + violation)` when the report failed.
void require(const CheckReport& report, ErrorKind kind, std::string_view context);

}  // namespace morphcoh
