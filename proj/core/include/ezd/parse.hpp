#pragma once

#include <string_view>

#include "ezd/poly.hpp"

namespace ezd {

// Parses a polynomial in the textual form used across the tool:
//
//   poly   := ['-'] term (('+' | '-') term)*
//   term   := int ('*' factor)* | factor ('*' factor)*
//   factor := ident ['^' int]
//
// '*' is mandatory between factors, coefficients are integers, whitespace is
// ignored.  Failures raise ParseError with the byte offset of the offending
// token.
Poly parse_polynomial(std::string_view text, const VarSet& vars,
                      const FieldSpec& field);

}  // namespace ezd
