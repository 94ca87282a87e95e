#pragma once

#include <stdexcept>
#include <string>

namespace pfaffrep {

enum class ErrorKind {
  MismatchedRing,
  DegreeMismatch,
  SyntaxError,
  NonHomogeneous,
  IndexOutOfRange,
  OddSize,
  SizeGuardExceeded,
  StructureViolation,
  UnsupportedDegree,
  DegreeCapExceeded,
  LinearityViolation,
  PurePowerViolation,
  NotSolvableOverZ,
  VerificationFailed,
  CorruptCache,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

// Base of every error raised by the library. The kind is what the CLI
// maps onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorKind::SyntaxError,
              what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MismatchedRing: return "MismatchedRing";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NonHomogeneous: return "NonHomogeneous";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::OddSize: return "OddSize";
    case ErrorKind::SizeGuardExceeded: return "SizeGuardExceeded";
    case ErrorKind::StructureViolation: return "StructureViolation";
    case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorKind::LinearityViolation: return "LinearityViolation";
    case ErrorKind::PurePowerViolation: return "PurePowerViolation";
    case ErrorKind::NotSolvableOverZ: return "NotSolvableOverZ";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::CorruptCache: return "CorruptCache";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace pfaffrep
