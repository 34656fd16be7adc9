#pragma once

#include <map>
#include <string>
#include <string_view>

#include "forge/polynomial.hpp"

namespace forge {

// Named polynomials that identifiers may refer to in addition to ring variables.
using Bindings = std::map<std::string, Polynomial>;

// Grammar (whitespace insignificant):
//   expr   := ['+'|'-'] term { ('+'|'-') term }
//   term   := factor { '*' factor }
//   factor := '-' factor | power
//   power  := atom [ '^' integer ]
//   atom   := integer [ '/' integer ] | identifier | '(' expr ')'
// The "a/b" literal is accepted only over Q; any other '/' is a syntax error.
// Throws ParseError (column is 1-based) or RingMismatch for bound names from
// another ring.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, const Bindings* bindings = nullptr);

}  // namespace forge
