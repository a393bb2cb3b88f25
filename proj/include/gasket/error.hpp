#pragma once

#include <stdexcept>
#include <string>

namespace gasket {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  LastDigitMismatch,
  BadBlock,
  ZeroSequence,
  NoRootInRange,
  AmbiguousRoot,
  NotParryValid,
  NotPrimitive,
  BudgetExceeded,
  CapExceeded,
  UndecidedAtHorizon,
  MarginNotEstablished,
  WidthNotReached,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gasket
