#pragma once

#include <string>
#include <vector>

#include "artin/ring.hpp"

namespace artin {

// Parses "+ - * / ^", integer and rational literals, named variables and
// parentheses; whitespace-insensitive. '/' only divides by a constant.
// Throws parse_error with 1-based position on bad input. `line0`/`col0`
// offset reported positions for callers parsing a slice of a larger file.
Polynomial parse_polynomial(const WeightedRing& ring, const std::string& text,
                            int line0 = 1, int col0 = 1);

// Semicolon-separated list of polynomials; empty entries are skipped.
std::vector<Polynomial> parse_polynomial_list(const WeightedRing& ring,
                                              const std::string& text,
                                              int line0 = 1, int col0 = 1);

}  // namespace artin
