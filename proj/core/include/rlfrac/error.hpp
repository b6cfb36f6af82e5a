#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rlfrac {

enum class ErrorCode {
  GridMismatch,
  DilationIncompatible,
  Alignment,
  NotRealSignal,
  OrderOutOfRange,
  DegenerateOrder,
  InvalidParameter,
  Window,
  Io,
  Parse,
};

/// Stable machine-readable name, e.g. "grid-mismatch".
std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rlfrac
