#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace filtra {

enum class ErrorKind {
  UnknownVariable,
  SyntaxError,
  ExponentOverflow,
  ContextMismatch,
  InfiniteSetEnumerationRequested,
  ColonByZero,
  NotNested,
  NotFiniteLength,
  NotSOP,
  NotMPrimary,
  HorizonExceeded,
  RatliffRushNotStabilized,
  NotAdmissible,
  SearchExhausted,
  NoSuperficialWitness,
  PreconditionFailed,
  HorizonTooSmall,
  NoPolynomialTail,
  EquivalenceViolation,
  ConfigError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `offset` is set for parse errors and
/// is a byte offset into the parsed text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> offset = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> offset_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& message);

}  // namespace filtra
