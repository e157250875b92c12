#ifndef NILP2_ERROR_HPP
#define NILP2_ERROR_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nilp2 {

enum class ErrorCode {
  NotOddPrime,
  ModulusTooLarge,
  DimensionMismatch,
  AmbientMismatch,
  PrimeMismatch,
  SpanDeficit,
  BadIndex,
  EntryOutOfRange,
  PresentationMismatch,
  InvalidIdentification,
  TrivialFactor,
  TrivialInput,
  OrderExceedsCap,
  InconsistentMap,
  PreconditionCenterNotDerived,
  BadMagic,
  ParseError,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure the engine reports. `line` is set for errors raised while
// parsing a text file (1-based).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<int> line = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<int> line() const noexcept { return line_; }

  // Same error, tagged with the file line it came from.
  Error at_line(int line) const;

 private:
  ErrorCode code_;
  std::optional<int> line_;
  std::string bare_;
};

}  // namespace nilp2

#endif  // NILP2_ERROR_HPP
