// Plain-text polynomial and system input.
//
// Polynomial grammar (one polynomial per line):
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := 'z' index ('^' exponent)?
//   coeff  := integer | integer '/' positive-integer
// Whitespace is free. Variables are z1..zn; missing coefficient means 1.
//
// System files are line oriented: '#' starts a comment, blank lines are
// skipped. A "field" header is followed by the affine components of the
// vector field (one per line, as many lines as there are variables), then a
// "variety" header is followed by the affine defining polynomials (one per
// line). The affine chart is the extra homogeneous coordinate Z_{n+1} = 1.
#pragma once

#include <string>
#include <vector>

#include "examples.hpp"
#include "multipoly.hpp"

namespace folis::verifier {

// Parses a single polynomial over the given number of variables.
// Throws ParseError on malformed input or variable index > num_vars.
MultiPoly parse_polynomial(const std::string& text, int num_vars);

// Parses a full system (field + variety sections) from text.
ExampleSystem parse_system(const std::string& text);

}  // namespace folis::verifier
