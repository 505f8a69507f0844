#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace flagcohom {

enum class ErrorCode {
  InvalidRank,
  DimensionMismatch,
  NotARoot,
  NotInSpan,
  IndexOutOfRange,
  NotProportional,
  CapExceeded,
  DimensionTooSmall,
  InvalidCover,
};

inline const char* error_code_name(ErrorCode c)
{
  switch (c) {
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotARoot: return "NotARoot";
    case ErrorCode::NotInSpan: return "NotInSpan";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotProportional: return "NotProportional";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::InvalidCover: return "InvalidCover";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code)
  {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Raised before enumeration starts when the number of coset
/// representatives would exceed the configured cap.
class CapExceeded : public Error {
public:
  CapExceeded(std::uint64_t total, std::uint64_t cap)
    : Error(ErrorCode::CapExceeded, "enumeration needs " + std::to_string(total) +
                                        " coset representatives, cap is " + std::to_string(cap)),
      total_(total), cap_(cap)
  {}

  std::uint64_t total() const noexcept { return total_; }
  std::uint64_t cap() const noexcept { return cap_; }

private:
  std::uint64_t total_;
  std::uint64_t cap_;
};

} // namespace flagcohom
