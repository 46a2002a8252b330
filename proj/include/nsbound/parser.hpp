#pragma once

#include "nsbound/poly.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nsbound {

// Grammar (whitespace ignored):
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := coeff [['*'] factor ('*' factor)*] | factor ('*' factor)*
//   coeff  := INT ['/' INT]
//   factor := NAME ['^' INT]          (INT > 0)
// Throws ParseError with the byte offset of the offending token.
Polynomial parse_polynomial(std::string_view text,
                            std::span<const std::string> variable_names);

// Variables x0..xr.
Polynomial parse_polynomial(std::string_view text, unsigned r);

std::vector<std::string> projective_variable_names(unsigned r);

} // namespace nsbound
