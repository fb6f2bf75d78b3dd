#pragma once

// Ideal files:
//
//   ring x, y : dp;
//   ideal: x^2 - 1, y^2 - 3*y + 2;
//
// `#` and `//` start comments that run to the end of the line.

#include <string>
#include <string_view>

#include "modpar/groebner.hpp"

namespace modpar {

/// Throws ParseError with the line and column of the offending token.
Ideal parse_ideal_file(std::string_view text);

std::string format_ideal_file(const Ideal& I);

/// Same generators, re-sorted for another ordering of the same variables.
Ideal with_order(const Ideal& I, const MonomialOrder& order);

}  // namespace modpar
