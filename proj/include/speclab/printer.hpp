#pragma once

#include <string>

#include "speclab/formula.hpp"

namespace speclab {

// Concrete-syntax rendering.  parse(render(f)) is structurally identical to f:
// binary operands get parentheses exactly where precedence or associativity
// requires them, and unary operators parenthesize any non-atomic child.
std::string render(const Formula& f);

}  // namespace speclab
