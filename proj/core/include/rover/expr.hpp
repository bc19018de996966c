#pragma once

#include <string>

#include "rover/groupoid.hpp"

namespace rover {

// Parses a whitespace-separated product of factors, rightmost factor acting
// first.  Factors: xN sN bN cN dN (1-based component index), p(i1 i2 ... ik)
// for a permutation given by its images, inv(EXPR) for a parenthesized
// inverse.  The rightmost factor is realized at its minimal arity; every
// other factor must have domain arity equal to the range arity accumulated
// so far, else ArityMismatch.
GroupoidElement parse_expression(const std::string& text);

}  // namespace rover
