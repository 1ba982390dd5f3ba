#include "prooflab/error.hpp"

namespace prooflab {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Syntax: return "Syntax";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::EmptyList: return "EmptyList";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::NotMember: return "NotMember";
    case ErrorKind::InvalidDeduction: return "InvalidDeduction";
    case ErrorKind::InvalidInterpretation: return "InvalidInterpretation";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::PremiseDonor: return "PremiseDonor";
    case ErrorKind::BadPath: return "BadPath";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      detail_(std::move(detail)) {}

SyntaxError::SyntaxError(std::size_t position, const std::string& message)
    : Error(ErrorKind::Syntax,
            "at position " + std::to_string(position) + ": " + message),
      position_(position) {}

}  // namespace prooflab
