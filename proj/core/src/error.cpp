#include "morphcoh/error.hpp"

namespace morphcoh {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Shape: return "ShapeError";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Validation: return "ValidationError";
    case ErrorKind::UnknownObject: return "UnknownObject";
    case ErrorKind::SubspaceViolation: return "SubspaceViolation";
    case ErrorKind::RotaBaxterViolation: return "RotaBaxterViolation";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::NotASubalgebra: return "NotASubalgebra";
    case ErrorKind::NotPreserved: return "NotPreserved";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::NotASection: return "NotASection";
    case ErrorKind::NotSimplyCohomologous: return "NotSimplyCohomologous";
    case ErrorKind::SizeCeiling: return "SizeCeiling";
    case ErrorKind::Internal: return "InternalError";
  }
  return "UnknownError";
}

void require(const CheckReport& report, ErrorKind kind, std::string_view context) {
  if (!report.ok) {
    throw Error(kind, std::string(context) + ": " + report.violation);
  }
}

}  // namespace morphcoh
