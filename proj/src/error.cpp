#include "nilp2/error.hpp"

namespace nilp2 {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotOddPrime: return "NotOddPrime";
    case ErrorCode::ModulusTooLarge: return "ModulusTooLarge";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::PrimeMismatch: return "PrimeMismatch";
    case ErrorCode::SpanDeficit: return "SpanDeficit";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::EntryOutOfRange: return "EntryOutOfRange";
    case ErrorCode::PresentationMismatch: return "PresentationMismatch";
    case ErrorCode::InvalidIdentification: return "InvalidIdentification";
    case ErrorCode::TrivialFactor: return "TrivialFactor";
    case ErrorCode::TrivialInput: return "TrivialInput";
    case ErrorCode::OrderExceedsCap: return "OrderExceedsCap";
    case ErrorCode::InconsistentMap: return "InconsistentMap";
    case ErrorCode::PreconditionCenterNotDerived: return "PreconditionCenterNotDerived";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

namespace {

std::string compose(ErrorCode code, const std::string& message,
                    std::optional<int> line) {
  std::string out(to_string(code));
  if (line) out += " (line " + std::to_string(*line) + ")";
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::optional<int> line)
    : std::runtime_error(compose(code, message, line)),
      code_(code),
      line_(line),
      bare_(message) {}

Error Error::at_line(int line) const { return Error(code_, bare_, line); }

}  // namespace nilp2
