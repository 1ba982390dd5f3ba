#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace prooflab {

// Domain error categories. The CLI prints these names verbatim in its
// "error: <Kind>: <detail>" line, so renaming one is a format change.
enum class ErrorKind {
  Syntax,
  ResourceLimit,
  EmptyList,
  Inconsistent,
  NotMember,
  InvalidDeduction,
  InvalidInterpretation,
  NotFound,
  PremiseDonor,
  BadPath,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

// Raised by the formula and proof-text parsers; carries the byte offset
// of the offending character.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace prooflab
