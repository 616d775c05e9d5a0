#pragma once

#include <string_view>

#include "filtra/polynomial.hpp"

namespace filtra {

/// Grammar:
///   expr  := ['+'|'-'] term (('+'|'-') term)*
///   term  := unary (('*' unary) | ('/' INT))*
///   unary := ('+'|'-') unary | power
///   power := atom ['^' INT]
///   atom  := INT | NAME | '(' expr ')'
/// Division only by nonzero integer literals, so printed rationals parse back.
/// Errors: UnknownVariable, SyntaxError (byte offset attached), ExponentOverflow.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

}  // namespace filtra
