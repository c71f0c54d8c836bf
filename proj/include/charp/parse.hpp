#pragma once

#include "charp/polynomial.hpp"

#include <string>

namespace charp {

// Parses polynomial text over the given ring. Accepted grammar:
//
//   expr    := term { ("+" | "-") term }
//   term    := factor { "*" factor }
//   factor  := { "-" } base [ "^" natural ]
//   base    := natural | variable | "(" expr ")"
//
// Integer literals reduce mod p; exponents are plain naturals. Variable names
// must be declared in the ring. Errors carry 1-based line/column positions.
Polynomial parse_polynomial(const std::string& text, const Ring& ring);

} // namespace charp
