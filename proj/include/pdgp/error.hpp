#pragma once

#include <stdexcept>
#include <string>

namespace pdgp {

enum class ErrorKind {
  SelfLoop,
  VertexOutOfRange,
  SizeCapExceeded,
  SameVertex,
  Overflow,
  BadOccurrenceCount,
  EmptyInput,
  ParseError,
  KOutOfRange,
  BadParameter,
  NonMultiplicativeInvariant,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorKind::SameVertex: return "SameVertex";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::BadOccurrenceCount: return "BadOccurrenceCount";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::KOutOfRange: return "KOutOfRange";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::NonMultiplicativeInvariant: return "NonMultiplicativeInvariant";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline void check_cap(long long value, long long cap, const char* what) {
  if (value > cap)
    throw Error(ErrorKind::SizeCapExceeded,
                std::string(what) + " = " + std::to_string(value) + " exceeds cap " + std::to_string(cap));
}

}  // namespace pdgp
