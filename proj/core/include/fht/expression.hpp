#pragma once

#include <string>

#include "fht/function.hpp"

namespace fht {

// Parses the function mini-language over (-1,1):
//   identifiers: x, w          literals: decimal numbers
//   operators:   + - * / ^     (usual precedence, ^ right-associative)
//   functions:   log exp sqrt abs sin cos
//   chi(a,b):    characteristic function of (a,b), constants a,b
// The singularity tag of the result is inferred: any chi(...) makes it a
// jump function (breakpoints at the interval ends); division by w makes it
// inverse_weight; otherwise smooth. Throws ParseError with line/column.
FunctionHandle parse_expression(const std::string& source);

}  // namespace fht
