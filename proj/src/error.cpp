#include "filtra/error.hpp"

namespace filtra {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ExponentOverflow: return "ExponentOverflow";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::InfiniteSetEnumerationRequested: return "InfiniteSetEnumerationRequested";
    case ErrorKind::ColonByZero: return "ColonByZero";
    case ErrorKind::NotNested: return "NotNested";
    case ErrorKind::NotFiniteLength: return "NotFiniteLength";
    case ErrorKind::NotSOP: return "NotSOP";
    case ErrorKind::NotMPrimary: return "NotMPrimary";
    case ErrorKind::HorizonExceeded: return "HorizonExceeded";
    case ErrorKind::RatliffRushNotStabilized: return "RatliffRushNotStabilized";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::NoSuperficialWitness: return "NoSuperficialWitness";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::HorizonTooSmall: return "HorizonTooSmall";
    case ErrorKind::NoPolynomialTail: return "NoPolynomialTail";
    case ErrorKind::EquivalenceViolation: return "EquivalenceViolation";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

namespace {
std::string decorate(ErrorKind kind, const std::string& message,
                     std::optional<std::size_t> offset) {
  std::string out(to_string(kind));
  if (offset) out += " at offset " + std::to_string(*offset);
  out += ": ";
  out += message;
  return out;
}
}  // namespace

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<std::size_t> offset)
    : std::runtime_error(decorate(kind, message, offset)),
      kind_(kind),
      offset_(offset) {}

void raise(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace filtra
