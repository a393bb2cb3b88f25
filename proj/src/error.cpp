#include "gasket/error.hpp"

namespace gasket {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::LastDigitMismatch: return "LastDigitMismatch";
    case ErrorCode::BadBlock: return "BadBlock";
    case ErrorCode::ZeroSequence: return "ZeroSequence";
    case ErrorCode::NoRootInRange: return "NoRootInRange";
    case ErrorCode::AmbiguousRoot: return "AmbiguousRoot";
    case ErrorCode::NotParryValid: return "NotParryValid";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::UndecidedAtHorizon: return "UndecidedAtHorizon";
    case ErrorCode::MarginNotEstablished: return "MarginNotEstablished";
    case ErrorCode::WidthNotReached: return "WidthNotReached";
  }
  return "Unknown";
}

}  // namespace gasket
